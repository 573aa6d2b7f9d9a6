"""File readers for the maximality toolkit."""

from .readers import ComplexFile, ComplexReader, DocumentInput, ProfileReader

__all__ = ['ComplexFile', 'ComplexReader', 'DocumentInput', 'ProfileReader']

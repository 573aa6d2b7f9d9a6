"""Verification suites for the maximality toolkit."""

from .verification_tasks import SUITES, CheckResult, VerificationTasks

__all__ = ['SUITES', 'CheckResult', 'VerificationTasks']

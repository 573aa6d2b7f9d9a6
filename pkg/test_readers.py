"""
Tests for the profile and complex file readers.
"""

import pytest

from errors import ComplexError, ProfileFormatError
from homology import homology_ranks
from surfaces import RankMuHint, RealComponent
from tools import ComplexReader, ProfileReader

K3_TEXT = """
name = "k3"
betti_f2 = [1, 0, 22, 0, 1]

[hodge]
h10 = 0
h20 = 1
h11 = 20

[[component]]
orientable = true
genus_or_crosscaps = 10

[[component]]
orientable = true
genus_or_crosscaps = 0
"""


def test_read_k3_profile():
    profile = ProfileReader.loads(K3_TEXT)
    assert profile.name == "k3"
    assert profile.betti_f2 == (1, 0, 22, 0, 1)
    assert profile.hodge.h11 == 20
    assert profile.real_components == (RealComponent.of_genus(10), RealComponent.sphere())
    assert not profile.tors2_h1


def test_rank_mu_hint_table():
    text = K3_TEXT + '\n[rank_mu_hint]\nvalue = 3\nexact = false\njustification = "model"\n'
    profile = ProfileReader.loads(text)
    assert profile.rank_mu_hint == RankMuHint(value=3, exact=False, justification="model")


def test_render_reads_back():
    profile = ProfileReader.loads(K3_TEXT)
    assert ProfileReader.loads(ProfileReader.render(profile)) == profile


def test_render_is_deterministic():
    profile = ProfileReader.loads(K3_TEXT)
    assert ProfileReader.render(profile) == ProfileReader.render(ProfileReader.loads(K3_TEXT))


@pytest.mark.parametrize("text, field", [
    ('name = "x"\n', "betti_f2"),
    ('name = "x"\nbetti_f2 = [1, 0, 1, 0]\n', "betti_f2"),
    ('name = "x"\nbetti_f2 = [1, 0, 1, 0, 1]\ncolour = "red"\n', "colour"),
    ('name = "x"\nbetti_f2 = [1, 0, 1, 0, 1]\n[[component]]\norientable = true\ngenus_or_crosscaps = -2\n',
     "component[0].genus_or_crosscaps"),
    ('name = "x"\nbetti_f2 = [1, 0, 1, 0, 1]\n[[component]]\norientable = false\ngenus_or_crosscaps = 0\n',
     "component[0]"),
])
def test_format_errors_name_the_field(text, field):
    with pytest.raises(ProfileFormatError) as info:
        ProfileReader.loads(text)
    assert info.value.field.startswith(field)


def test_malformed_toml():
    with pytest.raises(ProfileFormatError):
        ProfileReader.loads("name = \n")


def test_missing_profile_file(tmp_path):
    with pytest.raises(ProfileFormatError):
        ProfileReader.read(tmp_path / "absent.profile")


def test_write_and_read(tmp_path):
    profile = ProfileReader.loads(K3_TEXT)
    path = ProfileReader.write(profile, tmp_path / "k3.profile")
    assert ProfileReader.read(path) == profile


OCTAHEDRON_TEXT = """
# octahedron with the antipodal map
0 2 4
0 2 5
0 3 4
0 3 5
1 2 4
1 2 5
1 3 4
1 3 5
involution: 1 0 3 2 5 4
"""


def test_read_complex_with_involution():
    complex_, involution = ComplexReader.loads(OCTAHEDRON_TEXT)
    assert complex_.f_vector == (6, 12, 8)
    assert homology_ranks(complex_) == [1, 0, 1]
    assert involution.is_free


def test_complex_render_reads_back():
    parsed = ComplexReader.loads(OCTAHEDRON_TEXT)
    again = ComplexReader.loads(ComplexReader.render(*parsed))
    assert again.complex.simplices == parsed.complex.simplices
    assert again.involution.vertex_map == parsed.involution.vertex_map


@pytest.mark.parametrize("text", [
    "",
    "# only a comment\n",
    "0 1\n1 x\n",
    "0 1\ninvolution: 1 zero\n",
    "0 1\ninvolution: 0\n",
])
def test_bad_complex_files(text):
    with pytest.raises(ComplexError):
        ComplexReader.loads(text)


def test_missing_complex_file(tmp_path):
    with pytest.raises(ComplexError):
        ComplexReader.read(tmp_path / "absent.complex")

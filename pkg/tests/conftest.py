"""
Shared fixtures: sample ideals, algebras and the command-line app.
"""
import pytest
from click.testing import CliRunner

from tangentcone import create_app
from tangentcone.schemas.algebra_schema import load_algebra, load_map
from tangentcone.schemas.ideal_schema import load_ideal
from tangentcone.services.scheme_service import AlgebraSchemeService
from tests.fixtures.algebra_fixtures import (
    COROLLARY_ALGEBRA, OBSTRUCTED_CIRC, PAIRING_ALGEBRA, SQUARES_ALGEBRA, ZERO_ALGEBRA
)
from tests.fixtures.ideal_fixtures import CUSP_IDEAL, NODE_IDEAL, PARABOLA_IDEAL, SHIFTED_PARABOLA_IDEAL


@pytest.fixture
def cusp():
    return load_ideal(CUSP_IDEAL)


@pytest.fixture
def parabola():
    return load_ideal(PARABOLA_IDEAL)


@pytest.fixture
def shifted_parabola():
    return load_ideal(SHIFTED_PARABOLA_IDEAL)


@pytest.fixture
def node():
    return load_ideal(NODE_IDEAL)


@pytest.fixture
def pairing_algebra():
    return load_algebra(PAIRING_ALGEBRA)


@pytest.fixture
def squares_algebra():
    return load_algebra(SQUARES_ALGEBRA)


@pytest.fixture
def corollary_algebra():
    return load_algebra(COROLLARY_ALGEBRA)


@pytest.fixture
def zero_algebra():
    return load_algebra(ZERO_ALGEBRA)


@pytest.fixture
def obstructed_circ():
    return load_map(OBSTRUCTED_CIRC)


@pytest.fixture
def split_of():
    """Splitting factory."""
    return AlgebraSchemeService.build_splitting


@pytest.fixture
def cli():
    """Command group built with the testing configuration."""
    return create_app('testing')


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def write_file(tmp_path):
    """Write text under tmp_path and return the path as a string."""
    def write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return str(path)
    return write

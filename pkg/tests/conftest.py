import argparse

import pytest

from rings import build_ring

POLY_Q2 = "poly q=2"
POLY_Q3 = "poly q=3"
SHIFTED_Q2 = "shifted q=2 g=T^2+T+1"
SHIFTED_Q3 = "shifted q=3 g=T^2+1"
SHIFTED_Q2_CUBIC = "shifted q=2 g=T^3+T+1"
ELLIPTIC_Q2 = "elliptic q=2 a=[0,0,1,0,0]"
ELLIPTIC_Q2_H4 = "elliptic q=2 a=[1,0,0,0,1]"
ELLIPTIC_Q3 = "elliptic q=3 a=[0,0,0,2,1]"


@pytest.fixture
def poly2():
    return build_ring(POLY_Q2)


@pytest.fixture
def poly3():
    return build_ring(POLY_Q3)


@pytest.fixture
def shifted2():
    return build_ring(SHIFTED_Q2)


@pytest.fixture
def shifted3():
    return build_ring(SHIFTED_Q3)


@pytest.fixture
def shifted2_cubic():
    return build_ring(SHIFTED_Q2_CUBIC)


@pytest.fixture
def elliptic2():
    return build_ring(ELLIPTIC_Q2)


@pytest.fixture
def elliptic2_h4():
    return build_ring(ELLIPTIC_Q2_H4)


@pytest.fixture
def elliptic3():
    return build_ring(ELLIPTIC_Q3)


@pytest.fixture(params=[POLY_Q2, POLY_Q3, SHIFTED_Q2, ELLIPTIC_Q2])
def any_ring(request):
    return build_ring(request.param)


def make_args(**overrides):
    """The namespace main.py's parser would produce, with ``overrides`` applied."""
    args = argparse.Namespace(
        ring="",
        r=0,
        ideal="",
        level="",
        prec=0,
        format="",
        seed=-1,
        output_dir="",
        command="",
        config_file="",
        ring_config_file="",
        no_ring_defaults=False,
        opts=[],
    )
    for key, value in overrides.items():
        setattr(args, key, value)
    return args


@pytest.fixture
def cfg_factory():
    """Build a frozen config the way main.py does."""
    from main import setup_cfg

    def factory(opts=(), **overrides):
        return setup_cfg(make_args(opts=list(opts), **overrides))

    return factory

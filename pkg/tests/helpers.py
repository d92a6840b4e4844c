from functools import lru_cache

from bernstein_hecke import HeckeAlgebra, fixture_names, load_config

FIXTURES = fixture_names()


@lru_cache(maxsize=None)
def algebra(name: str) -> HeckeAlgebra:
    return HeckeAlgebra.from_config(load_config(name))


@lru_cache(maxsize=None)
def config(name: str):
    return load_config(name)

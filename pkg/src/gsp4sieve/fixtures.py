"""Bundled example curves with their conductor inputs and sample primes."""
from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources

from .curve import CurveModel, parse_curve

__all__ = ["Fixture", "FIXTURES", "get_fixture", "hecke_data_dir"]


@dataclass(frozen=True)
class Fixture:
    name: str
    curve_file: str
    conductor: str
    bound_at: tuple[int, ...] = ()
    phi: dict[int, int] = field(default_factory=dict)
    semiabelian: tuple[int, ...] = ()
    reducible: tuple[int, ...] = ()
    hecke: tuple[int, ...] = ()
    quadchar: tuple[int, ...] = ()
    certificate: tuple[int, ...] = ()
    # q used for the case (*) Legendre family; empty means every certificate q
    star: tuple[int, ...] = ()
    note: str = ""

    def curve(self) -> CurveModel:
        text = resources.files("gsp4sieve.data.curves").joinpath(self.curve_file).read_text(encoding="utf-8")
        return parse_curve(text)

    def samples(self) -> dict[str, tuple[int, ...]]:
        return {
            "reducible": self.reducible,
            "hecke": self.hecke,
            "quadchar": self.quadchar,
            "certificate": self.certificate,
        }


FIXTURES: dict[str, Fixture] = {
    f.name: f
    for f in [
        Fixture(
            "A",
            "A.curve",
            "2^12*5*23",
            reducible=(229, 257, 641, 769),
            hecke=(3, 7, 11, 13, 17, 19),
            quadchar=(3, 7, 13, 97, 113, 569, 769),
        ),
        Fixture(
            "A2",
            "A2.curve",
            "2^8*19*151",
            bound_at=(2,),
            phi={19: 1, 151: 1},
            semiabelian=(19, 151),
            reducible=(17, 97),
            hecke=(3,),
            quadchar=(3, 5, 97, 257),
            certificate=(3, 11, 41, 79, 101, 199, 211, 281),
            star=(3,),
        ),
        Fixture(
            "A3",
            "A3.curve",
            "2^20",
            bound_at=(2,),
            reducible=(3, 17, 19, 31),
            hecke=(7, 11, 13),
            # Frob_5 says nothing about ell = 5, so 7 is added to rule 5 out
            quadchar=(3, 5, 7),
            certificate=(3, 5, 17),
            star=(3,),
        ),
        Fixture(
            "Leprevost",
            "Leprevost.curve",
            "2^20*5^2*13^3*17^2",
            bound_at=(2,),
            phi={13: 13},
            reducible=(3, 7, 11, 19, 23, 29),
            hecke=(3, 7),
            quadchar=(3, 7, 11, 19, 23, 29, 31, 37, 41, 43),
            certificate=(3, 7, 11),
            note="the 2-exponent is unknown; 20 is the uniform upper bound",
        ),
        Fixture(
            "BrumerKramer",
            "BrumerKramer.curve",
            "709",
            reducible=(3, 5, 11, 17),
            hecke=(3, 5),
            quadchar=(3, 5, 11, 17, 23, 29, 31, 37),
            certificate=(3, 5, 11),
        ),
    ]
}


def get_fixture(name: str) -> Fixture:
    try:
        return FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}") from None


def hecke_data_dir():
    return resources.files("gsp4sieve.data").joinpath("hecke")

"""Built-in certified families: the sporadic non-abelian order-32 PDF, the
trivial order-4 complement pair, and a searched order-16 complement pair."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .groups import (DEFAULT_CONVENTION, CyclicGroup, DiffConvention,
                     ProductGroup, Semidirect32)
from .multisets import (PDF, DesignFamily, VerificationReport, make_family,
                        verify)

# blocks of the order-32 family, as (x, y) pairs under the twisted law
ORDER32_BLOCKS_XY = (
    ((0, 0), (2, 0)),
    ((1, 0), (3, 4)),
    ((0, 1), (0, 3), (1, 2), (1, 5), (1, 6), (3, 3)),
)


@lru_cache(maxsize=None)
def order32_family() -> DesignFamily:
    """The sporadic (32,[2,2,6,22],16) family; last block is the complement."""
    g = Semidirect32()
    blocks = [sorted(g.index_of(xy) for xy in blk) for blk in ORDER32_BLOCKS_XY]
    used = set().union(*blocks)
    blocks.append(sorted(set(g.elements()) - used))
    return make_family(g, blocks)


@lru_cache(maxsize=None)
def trivial_hds_family() -> DesignFamily:
    """{D, G minus D} over Z4 for the one-element difference set {0}."""
    return make_family(CyclicGroup(4), [[0], [1, 2, 3]])


@lru_cache(maxsize=None)
def hds16_family() -> DesignFamily:
    """{D, G minus D} over Z4 x Z4 for the first searched (16,6,2)-DS."""
    from .search import SearchBounds, search_hds

    g = ProductGroup([CyclicGroup(4), CyclicGroup(4)])
    found = search_hds(g, 2, SearchBounds(max_results=1))
    if not found.results:  # exhaustive search cannot miss; defensive only
        raise RuntimeError("no (16,6,2) difference set found in Z4xZ4")
    d = found.results[0]
    return make_family(g, [sorted(d), sorted(set(g.elements()) - set(d))])


_BUILDERS = {
    "order-32": order32_family,
    "trivial-hds": trivial_hds_family,
    "hds16": hds16_family,
}


def catalog_names() -> tuple[str, ...]:
    return tuple(_BUILDERS)


def catalog_family(name: str) -> DesignFamily:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}; "
                       f"choose from {sorted(_BUILDERS)}") from None


@dataclass(frozen=True)
class CatalogCertification:
    name: str
    convention: DiffConvention
    report: VerificationReport
    hadamard: bool

    @property
    def certified(self) -> bool:
        return self.report.kind == PDF and self.hadamard


def _certify(name: str, convention: DiffConvention) -> CatalogCertification:
    rep = verify(catalog_family(name), convention)
    hadamard = rep.kind == PDF and rep.v == 2 * rep.lambda_or_mu
    return CatalogCertification(name, convention, rep, hadamard)


def certify_catalog() -> list[CatalogCertification]:
    """Verify every entry; the order-32 one under both conventions.

    The sporadic family's source states no difference convention, so both
    are run and the certification records which ones succeed.
    """
    out = []
    for conv in (DiffConvention.RIGHT_INVERSE, DiffConvention.LEFT_INVERSE):
        out.append(_certify("order-32", conv))
    out.append(_certify("trivial-hds", DEFAULT_CONVENTION))
    out.append(_certify("hds16", DEFAULT_CONVENTION))
    return out


@lru_cache(maxsize=None)
def order32_certified_conventions() -> tuple[DiffConvention, ...]:
    """Conventions under which the order-32 entry certifies as a PDF."""
    return tuple(c.convention for c in certify_catalog()
                 if c.name == "order-32" and c.certified)

"""Exact-arithmetic rational homotopy calculator for open books.

Space models, open book specs, and reports cross the boundary as plain dicts
mirroring the CLI's JSON schema; rank tables are dicts mapping degree to rank,
with exact (arbitrarily large) integer values.
"""

from ._core import (
    DEFAULT_TRUNCATION,
    boundary_connected_sum_variation,
    brieskorn_multiplicity,
    classify,
    double_loop_ranks,
    free_lie_ranks,
    grove_halperin_test,
    growth_estimate,
    homotopy_ranks,
    is_rationally_elliptic,
    loop_ranks,
    milnor_openbook_spec,
    milnor_page,
    moebius,
    monodromy_report,
    openbook_loop_ranks,
    space_ranks,
    suspend,
    validate,
    variation_determinant,
    variation_is_iso,
    witt_number,
)


def sphere(dim):
    """Space document for the sphere S^dim."""
    return {"kind": "sphere", "dim": dim}


def wedge(*dims):
    """Space document for a wedge of spheres with the given dimensions."""
    return {"kind": "wedge", "dims": list(dims)}


def contractible():
    return {"kind": "contractible"}


def elliptic_ranks(ranks):
    """Space document for a rationally elliptic space with the given ranks."""
    return {"kind": "elliptic_ranks", "ranks": {str(d): r for d, r in ranks.items()}}


def identity_monodromy():
    return {"kind": "identity_on_rational_homotopy"}


def finite_order_monodromy(m, nilpotent_action, evidence="homotopy"):
    return {
        "kind": "finite_order",
        "m": m,
        "nilpotent_action": nilpotent_action,
        "nilpotence_evidence": evidence,
    }


def openbook_spec(ambient_dim, page, fibre=None, monodromy=None, *,
                  page_simply_connected=True, boundary_nilpotent_connected=True,
                  total_simply_connected=True):
    """Open book spec document; hypotheses are asserted flags, defaulted on."""
    spec = {
        "ambient_dim": ambient_dim,
        "page": page,
        "page_simply_connected": page_simply_connected,
        "boundary_nilpotent_connected": boundary_nilpotent_connected,
        "total_simply_connected": total_simply_connected,
    }
    if fibre is not None:
        spec["fibre"] = fibre
    if monodromy is not None:
        spec["monodromy"] = monodromy
    return spec


__all__ = [
    "DEFAULT_TRUNCATION",
    "boundary_connected_sum_variation",
    "brieskorn_multiplicity",
    "classify",
    "contractible",
    "double_loop_ranks",
    "elliptic_ranks",
    "finite_order_monodromy",
    "free_lie_ranks",
    "grove_halperin_test",
    "growth_estimate",
    "homotopy_ranks",
    "identity_monodromy",
    "is_rationally_elliptic",
    "loop_ranks",
    "milnor_openbook_spec",
    "milnor_page",
    "moebius",
    "monodromy_report",
    "openbook_loop_ranks",
    "openbook_spec",
    "space_ranks",
    "sphere",
    "suspend",
    "validate",
    "variation_determinant",
    "variation_is_iso",
    "wedge",
    "witt_number",
]

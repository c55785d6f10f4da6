"""Exact rational geometry: halfspace bodies, feasibility, atoms, realizations."""

from .linprog import BudgetCounter, FeasibilityWitness, feasible, witness_satisfies
from .bodies import (
    Constraint,
    HalfspaceBody,
    Realization,
    interval_body,
    polygon_body,
    realization_from_json_obj,
    realization_to_json_obj,
    segment_body,
    transform_realization,
)
from .atoms import (
    atom_nonempty,
    atom_of_point,
    closure_realization,
    interior_realization,
    nondegeneracy_check_closed,
    nondegeneracy_check_open,
    realized_code,
)
from .fixtures import interval_realization, theta_figure_realization
from .sunflower import build_sunflower_realization
from .svg import render_svg

__all__ = [
    "BudgetCounter",
    "Constraint",
    "FeasibilityWitness",
    "HalfspaceBody",
    "Realization",
    "atom_nonempty",
    "atom_of_point",
    "build_sunflower_realization",
    "closure_realization",
    "feasible",
    "interior_realization",
    "interval_body",
    "interval_realization",
    "nondegeneracy_check_closed",
    "nondegeneracy_check_open",
    "polygon_body",
    "realization_from_json_obj",
    "realization_to_json_obj",
    "realized_code",
    "render_svg",
    "segment_body",
    "theta_figure_realization",
    "transform_realization",
    "witness_satisfies",
]

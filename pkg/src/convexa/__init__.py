"""convexa: combinatorial and geometric analysis of convex neural codes.

Core objects are immutable: codes (bitmask codewords), pseudo-monomial
canonical forms, containment-graph orderings, obstruction certificates
(rigid pairs, cycles, index 5-tuples), and exact rational halfspace
realizations under :mod:`convexa.geometry`.
"""

from .catalog import generate_Dn, generate_sunflower, list_names, named_code
from .codes import (
    MAX_NEURONS,
    NeuralCode,
    Restriction,
    add_redundant_neuron,
    adjoin_union_neuron,
    code_to_json_obj,
    format_code,
    has_empty_codeword,
    mask_to_neurons,
    maximal_codewords,
    neurons_to_mask,
    parse_code,
    permute_neurons,
    restrict,
    word_key,
)
from .containment import (
    ContainmentGraph,
    IntervalViolation,
    LinearOrdering,
    alternating_condition,
    containment_graph,
    interval_condition,
    recognize_cycle,
    recognize_path,
    to_dot,
    to_json_adjacency,
    triplewise_condition,
)
from .errors import BudgetExceededError, CodeParseError, NotFullDimensionalError
from .ideal import (
    CANONICAL_FORM_MAX_N,
    CanonicalForm,
    PseudoMonomial,
    RFRelation,
    canonical_form,
    cf_to_json_obj,
    characteristic,
    divides,
    evaluate,
    format_pseudo_monomial,
    ideal_contains,
    parse_pseudo_monomial,
    rf_relationships,
)
from .rf_criterion import (
    RFCheckResult,
    RFTupleCertificate,
    cf_criterion,
    check_tuple,
    safe_codeword_additions,
    search_rf_obstruction,
)
from .rigidity import (
    INTERSECTION,
    UNION,
    CycleCertificate,
    RigidPairCertificate,
    RigidWitness,
    SearchBudget,
    certificate_to_obj,
    cycle_criterion,
    distinguished_subcode,
    intersection_witness,
    path_rigidity_witness,
    replay_certificate,
    rigid_pair_obstruction,
    search_rigid_obstruction,
    verify_witness,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

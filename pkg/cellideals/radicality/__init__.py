"""Radicality tests, certificates and the library of non-radical collections."""

from cellideals.radicality.core import (
    METHODS,
    EntryValidation,
    discover_minimally_non_radical,
    is_minimally_non_radical,
    is_radical,
    validate_entry,
    validate_library,
)
from cellideals.radicality.exact import exact_radical, sqrt_ideal, squarefree_certificate
from cellideals.radicality.family import (
    dt_deletion_order,
    dt_family,
    dt_labels,
    dt_order,
    dt_reduced_basis,
    dt_witness,
    validate_dt,
)
from cellideals.radicality.library import ConfigLibrary, ConfigValidationError, screen_nonradical
from cellideals.radicality.verdict import RadicalVerdict
from cellideals.radicality.witness import WitnessSchedule, witness_search

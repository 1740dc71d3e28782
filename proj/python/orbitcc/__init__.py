"""Exact engine for K-orbit scenarios.

Thin re-export of the compiled extension: scenario loading and validation,
the characteristic-cycle solver, packet assembly, and translation transport.
"""

from orbitcc._core import (  # noqa: F401
    InputError,
    IntegrityError,
    Pairing,
    ParseError,
    Scenario,
    Solution,
    StateError,
    Table,
    classify,
    generate_rank_one,
    horizontal_witness,
    is_generic,
    is_regular_lambda,
    l_packet,
    load_pairing,
    load_scenario,
    micro_packet,
    micro_packet_for_form,
    parabolic,
    product,
    pull_orbit,
    root_pairing,
    save_scenario,
    scenario_to_json,
    shahidi_check,
    solve,
    tau_invariant,
    transport_cc,
    transport_genericity,
    transport_packet,
    validate,
    validate_pairing,
    verify_generic_membership,
    weyl_act,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

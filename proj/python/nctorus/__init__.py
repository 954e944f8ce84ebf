"""Noncommutative torus toolkit: Weyl algebra, GNS representation, modular theory, Dirac blocks."""

from ._core import (
    BorelFunction,
    ConfigError,
    DiffeoSpec,
    DiracContext,
    ExperimentConfig,
    TransformKind,
    TruncationBox,
    WeylElement,
    abel_mean,
    a_sequence,
    deformed_block,
    fejer_mean,
    growth_sequence,
    hat_functional,
    involution,
    load_config,
    matrix_element_closed_form,
    matrix_element_oracle,
    paren_functional,
    radon_nikodym_values,
    represent,
    riemann_lebesgue_profile,
    rotation_number,
    run_verify,
    star_product,
    tomita_check,
    trace,
    undeformed_block,
)

__all__ = [name for name in dir() if not name.startswith("_")]

"""Exact predictions and deterministic renders of quadratic-residue plot patterns."""

from ._qrpat import (
    Canvas,
    FractionParams,
    IoError,
    Parabola,
    balanced_residue,
    beta_signature,
    bundle_parameter,
    denominator_set,
    farey_fractions,
    fraction_params,
    lambda_value,
    layouts_equivalent,
    overlay_svg,
    parabola_family,
    q_congruent,
    qr_mod,
    render_scatter,
    render_sum_squares,
    residues_near,
    verify_prop1,
    vertex_on_bundle,
)

__all__ = [
    "Canvas",
    "FractionParams",
    "IoError",
    "Parabola",
    "balanced_residue",
    "beta_signature",
    "bundle_parameter",
    "denominator_set",
    "farey_fractions",
    "fraction_params",
    "lambda_value",
    "layouts_equivalent",
    "overlay_svg",
    "parabola_family",
    "q_congruent",
    "qr_mod",
    "render_scatter",
    "render_sum_squares",
    "residues_near",
    "verify_prop1",
    "vertex_on_bundle",
]

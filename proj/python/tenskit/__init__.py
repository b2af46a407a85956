"""Exact calculator for classical tensors as linear maps.

Everything is computed over the rationals; scalars enter and leave as
``fractions.Fraction``. Index labels are plain strings like ``"a"``,
``"b*"`` (dual slot) or ``"a'"`` (primed by metric raising/lowering).
"""

from ._core import (
    BasisChange,
    Metric,
    TensorMap,
    TenskitError,
    __version__,
    add,
    apply_multi,
    compose,
    compose_changes,
    contract,
    dual_shift,
    eval_expr,
    from_json,
    inner,
    lower_index,
    outer,
    permute,
    plan,
    pretty,
    raise_index,
    relabel,
    run_suite,
    scalar_invariance_check,
    scale,
    suite_names,
    to_json,
    transform,
    transform_operator,
)

__all__ = [
    "BasisChange",
    "Metric",
    "TensorMap",
    "TenskitError",
    "__version__",
    "add",
    "apply_multi",
    "compose",
    "compose_changes",
    "contract",
    "dual_shift",
    "eval_expr",
    "from_json",
    "inner",
    "lower_index",
    "outer",
    "permute",
    "plan",
    "pretty",
    "raise_index",
    "relabel",
    "run_suite",
    "scalar_invariance_check",
    "scale",
    "suite_names",
    "to_json",
    "transform",
    "transform_operator",
]

"""Exact finite commutative rings and the projective lines over them."""

from ._ringline import (  # noqa: F401
    CheckResult,
    Element,
    ElementClass,
    ExportFormat,
    GraphTarget,
    Ideal,
    Layer,
    Mat2,
    PointLabel,
    ProjectiveLine,
    QuotientRing,
    Ring,
    RingMap,
    ShellChoice,
    ShellTable,
    Subring,
    Suite,
    TableChoice,
    ZdWeight,
    __version__,
    admissible_by_completion,
    all_ideals,
    build_line,
    builtin_isomorphism_class,
    builtin_ring,
    det2,
    direct_product,
    export_graph,
    find_isomorphism,
    ideals_report,
    inner_shell_labels,
    invertible_by_search,
    is_admissible,
    is_gf2_cubed,
    is_homomorphism,
    is_invertible_2x2,
    is_isomorphism_map,
    is_local,
    jacobson_radical,
    label_point,
    layer_census,
    line_report,
    make_gf,
    maximal_ideals,
    nucleus_labels,
    outer_shell_labels,
    point_by_label,
    principal_ideal,
    quotient,
    render_check_report,
    render_table,
    resolve_ring_argument,
    ring_from_spec,
    ring_report,
    run_suite,
    shell_table,
    subring_as_ring,
    subrings,
    tables_report,
    zero_divisor_weight,
)

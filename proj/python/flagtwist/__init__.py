"""Moment maps, fiberwise Dehn twists and reduced-space braid generators
on T*(SU(n)/T)."""

from ._core import (  # noqa: F401
    __version__,
    exp_skew,
    fiber_normal_form,
    figure1_report,
    induced_rays,
    is_singular_value,
    jordan_partition,
    lift_chart,
    moment,
    moment_rank,
    nilpotent_moment,
    pairing,
    project_chart,
    random_su,
    reduce_at_zero,
    run_verify,
    sample_fiber,
    sp4_matrix,
    sp4_membership,
    springer_class,
    strict_upper,
    tau,
    tau_reduced,
    twist_profile_h,
    vertex_permutation,
    weyl_element,
)

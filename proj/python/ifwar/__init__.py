"""Intuitionistic-fuzzy multi-attribute threat assessment with a hex-grid
wargame environment and an actor-critic trainer."""

from ._core import (  # noqa: F401
    Action,
    Env,
    Ifn,
    IntervalNumber,
    Polarity,
    __version__,
    assess,
    assess_snapshot,
    attack_threat,
    defense_value,
    distance_threat,
    entropy,
    environment_threat,
    ifn_add,
    ifn_mul,
    ifn_pow,
    ifn_scale,
    ifn_similarity,
    ifwa,
    interval_add,
    interval_div,
    interval_mul,
    interval_scale,
    interval_sub,
    intervals_to_ifns,
    reals_to_ifns,
    speed_threat,
    train,
    visibility_threat,
)

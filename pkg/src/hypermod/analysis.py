"""Closed-form degree-distribution predictions, tail fitting and bounds.

The growth process drives a limiting recurrence for the fraction of
vertices of each degree; its solution decays like ``k**-beta`` with an
explicit amplitude, which both the exponent prediction and the exact
degree-fraction table below evaluate. Tail exponents of empirical degree
histograms are estimated by discrete maximum likelihood with an optional
Kolmogorov-Smirnov choice of the lower cutoff. Modularity lower bounds
for the community model come in a profile-aware form and a two-parameter
relaxation of it.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq
from scipy.special import gammaln, zeta

from .geng import community_marginals, reduce_community
from .modularity import CardinalityProfile, cardinality_profile

MIN_TAIL_SAMPLES = 50


@dataclass
class TheoryPrediction:
    """Power-law exponent and the per-step rates behind it.

    ``vertex_rate``  expected vertices added per step
    ``degree_rate``  expected degree increments per step
    ``tail_ratio``   (degree_rate + gamma*vertex_rate) / (degree_rate - m*p_vertex_edge),
                     the decay ratio of the degree recurrence; beta = 1 + tail_ratio
    ``amplitude``    constant c with fraction-of-degree-k ~ c * k**-beta
    """

    beta: float
    vertex_rate: float
    degree_rate: float
    tail_ratio: float
    amplitude: float


@dataclass
class DegreeFractionTable:
    """Exact limit fractions of degree-k vertices per time step.

    ``limits[k]`` is the limiting value of (number of degree-k vertices)/t;
    ``per_vertex[k]`` divides by the vertex rate, giving the limiting
    fraction of vertices that have degree k.
    """

    limits: list
    per_vertex: list


@dataclass
class TailFit:
    """Discrete power-law fit of a degree histogram tail."""

    beta_hat: float
    k_min: int
    n_tail: int
    stderr: float


@dataclass
class BoundInputs:
    """Per-community edge statistics feeding the modularity bounds.

    ``p_within[i]`` probability a hyperedge lies entirely inside community i;
    ``s_touch[i]``  probability it touches community i at all;
    ``profile``     cardinality mix of the hypergraph;
    ``max_cardinality`` the bound's uniform cap on hyperedge size.
    """

    p_within: list
    s_touch: list
    profile: CardinalityProfile
    max_cardinality: int
    num_communities: int

    @property
    def alpha_noise(self):
        return 1.0 - sum(self.p_within)

    @property
    def beta_max(self):
        return max(self.p_within)


def predict_beta_h(params):
    """Exponent of the degree power law of the general growth process."""
    params.validate()
    m = params.edges_per_event
    vertex_rate = params.p_vertex + params.p_vertex_edge
    degree_rate = m * (
        params.p_vertex_edge * params.attach_size.mean()
        + sum(p * d.mean() for p, d in zip(params.p_edge, params.edge_sizes))
    )
    denom = degree_rate - m * params.p_vertex_edge
    if denom <= 0:
        raise ValueError(
            "degenerate process: expected degree increments do not exceed "
            "the new vertex's own attachment degree"
        )
    gamma = params.gamma
    ratio = (degree_rate + gamma * vertex_rate) / denom
    beta = 1.0 + ratio
    # amplitude via log-gamma; the isolated-vertex term vanishes as gamma -> 0
    if gamma > 0:
        term_v = params.p_vertex * ratio * math.exp(gammaln(gamma + ratio) - gammaln(gamma))
    else:
        term_v = 0.0
    term_ve = params.p_vertex_edge * ratio * math.exp(
        gammaln(m + gamma + ratio) - gammaln(m + gamma)
    )
    return TheoryPrediction(beta, vertex_rate, degree_rate, ratio, term_v + term_ve)


def degree_fraction_oracle(params, k_max):
    """Exact limiting fractions of degree-k vertices for k = 0..k_max.

    Solves the recurrence
    ``L_0 = p_vertex * D / (gamma + D)`` and
    ``L_k = (L_{k-1} * (k-1+gamma) + [k == m] * p_vertex_edge * D) / (k + gamma + D)``
    with D the prediction's tail ratio.
    """
    if k_max < params.edges_per_event:
        raise ValueError("k_max must reach the attachment degree edges_per_event")
    pred = predict_beta_h(params)
    d = pred.tail_ratio
    gamma = params.gamma
    m = params.edges_per_event
    limits = [params.p_vertex * d / (gamma + d)]
    for k in range(1, k_max + 1):
        bump = params.p_vertex_edge * d if k == m else 0.0
        limits.append((limits[k - 1] * (k - 1 + gamma) + bump) / (k + gamma + d))
    if pred.vertex_rate <= 0:
        raise ValueError("no vertices are ever added; per-vertex fractions undefined")
    per_vertex = [x / pred.vertex_rate for x in limits]
    return DegreeFractionTable(limits, per_vertex)


def predict_beta_g(params):
    """Global and per-community power-law exponents of the community model.

    Every community evolves like a reduced single-population process, so
    its exponent comes from that reduction; the global exponent is the
    smallest one.
    """
    params.validate()
    if params.p_vertex >= 1.0:
        raise ValueError("exponent prediction needs p_vertex < 1 (hyperedges must occur)")
    s = community_marginals(params.profile)
    betas = []
    for j in range(params.num_communities):
        if s[j] <= 0:
            raise ValueError(
                f"community {j} receives vertices but never hyperedges (touch probability 0)"
            )
        betas.append(predict_beta_h(reduce_community(params, j)).beta)
    return min(betas), betas


def _mean_log_zeta(beta, k_min, _h=1e-7):
    """-zeta'(beta, k_min) / zeta(beta, k_min), the model mean of ln k."""
    z = zeta(beta, k_min)
    dz = (zeta(beta + _h, k_min) - zeta(beta - _h, k_min)) / (2.0 * _h)
    return -dz / z


def _mle_beta(mean_ln, k_min):
    """Solve the discrete power-law likelihood equation for the exponent."""
    if mean_ln <= math.log(k_min) + 1e-12:
        raise ValueError("degenerate tail: every sampled degree equals the cutoff")

    def f(b):
        return _mean_log_zeta(b, k_min) - mean_ln

    lo = 1.0 + 1e-5
    if f(lo) <= 0:
        return lo
    hi = 4.0
    while f(hi) > 0:
        hi *= 2.0
        if hi > 1e6:
            raise ValueError("no finite exponent fits the tail (degenerate degrees)")
    return brentq(f, lo, hi, xtol=1e-10)


def _fit_at(ks, counts, k_min):
    mask = ks >= k_min
    tail_ks = ks[mask]
    tail_counts = counts[mask]
    n = int(tail_counts.sum())
    if n < MIN_TAIL_SAMPLES:
        raise ValueError(
            f"only {n} samples with degree >= {k_min}; need {MIN_TAIL_SAMPLES}"
        )
    if len(tail_ks) < 2:
        raise ValueError("tail has a single distinct degree; no slope to fit")
    mean_ln = float((tail_counts * np.log(tail_ks)).sum() / n)
    beta = _mle_beta(mean_ln, int(k_min))
    return beta, n, tail_ks, tail_counts


def _ks_distance(beta, k_min, tail_ks, tail_counts):
    n = tail_counts.sum()
    ecdf = np.cumsum(tail_counts) / n
    z = zeta(beta, k_min)
    model_cdf = 1.0 - zeta(beta, tail_ks + 1) / z
    return float(np.max(np.abs(ecdf - model_cdf)))


def fit_tail_exponent(hist, k_min=None):
    """Fit a discrete power law to a degree histogram tail.

    With ``k_min`` given, fits degrees >= k_min by exact discrete maximum
    likelihood. Otherwise scans candidate cutoffs and keeps the one whose
    fitted law is closest to the empirical tail in Kolmogorov-Smirnov
    distance. Degree-0 vertices never participate.
    """
    items = sorted((k, c) for k, c in hist.counts.items() if k >= 1 and c > 0)
    if not items:
        raise ValueError("histogram has no vertices of positive degree")
    ks = np.array([k for k, _ in items], dtype=float)
    counts = np.array([c for _, c in items], dtype=float)
    if k_min is not None:
        beta, n, _, _ = _fit_at(ks, counts, k_min)
        return TailFit(beta, int(k_min), n, (beta - 1.0) / math.sqrt(n))
    best = None
    for candidate in ks:
        try:
            beta, n, tail_ks, tail_counts = _fit_at(ks, counts, candidate)
        except ValueError:
            break  # tails only shrink from here on
        dist = _ks_distance(beta, candidate, tail_ks, tail_counts)
        if best is None or dist < best[0] - 1e-12:
            best = (dist, beta, int(candidate), n)
    if best is None:
        raise ValueError(f"no cutoff leaves {MIN_TAIL_SAMPLES} tail samples")
    _, beta, kmin, n = best
    return TailFit(beta, kmin, n, (beta - 1.0) / math.sqrt(n))


def bound_inputs_from_profile(profile, card_profile):
    """Bound inputs implied by a community profile and a cardinality mix.

    A hyperedge lies within community i exactly when its community set is
    the singleton {i}; the touch probabilities are the profile marginals.
    """
    r = profile.num_communities
    p_within = [profile.probability((i,)) for i in range(r)]
    return BoundInputs(
        p_within=p_within,
        s_touch=community_marginals(profile),
        profile=card_profile,
        max_cardinality=card_profile.max_cardinality,
        num_communities=r,
    )


def empirical_bound_inputs(h):
    """Bound inputs measured from a generated community-labeled hypergraph."""
    if h.community is None:
        raise ValueError("hypergraph carries no community labels")
    r = h.num_communities
    ne = h.num_edges
    if ne == 0:
        raise ValueError("need at least one hyperedge")
    within = [0] * r
    touch = [0] * r
    community = h.community
    for e in h.edges:
        seen = {community[v] for v in e}
        if len(seen) == 1:
            within[next(iter(seen))] += 1
        for c in seen:
            touch[c] += 1
    return BoundInputs(
        p_within=[w / ne for w in within],
        s_touch=[t / ne for t in touch],
        profile=cardinality_profile(h),
        max_cardinality=max(len(e) for e in h.edges),
        num_communities=r,
    )


def modularity_lower_bound_general(inputs):
    """Profile-aware lower bound on the achievable hypergraph modularity."""
    delta = inputs.profile.delta
    if delta <= 0:
        raise ValueError("mean cardinality must be positive")
    d = inputs.max_cardinality
    total = 0.0
    for p_i, s_i in zip(inputs.p_within, inputs.s_touch):
        inner = ((d - 1) * s_i + p_i) / delta
        total += sum(a_ell * inner ** ell for ell, a_ell in inputs.profile.a.items())
    return sum(inputs.p_within) - total


def modularity_lower_bound_ab(alpha_noise, beta_max, card_profile, d, r):
    """Two-parameter modularity lower bound from the cross-community noise
    fraction and the largest within-community probability."""
    if not 0.0 <= alpha_noise <= 1.0 or not 0.0 <= beta_max <= 1.0:
        raise ValueError("alpha_noise and beta_max must lie in [0, 1]")
    delta = card_profile.delta
    ratio = d / delta
    a1 = card_profile.a.get(1, 0.0)
    value = 1.0 - alpha_noise - a1 * ratio * ((d - 2) * alpha_noise + 1.0)
    for ell, a_ell in card_profile.a.items():
        if ell >= 2:
            value -= a_ell * ratio ** ell * (
                (r - 1) * beta_max ** ell + ((d - 1) * alpha_noise + beta_max) ** ell
            )
    return value

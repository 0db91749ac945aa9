"""Command-line interface.

Subcommands read generator/experiment configs (see config.py for the
schema), take ``--seed``/``--steps`` overrides, and write hyperedge
lists, label files, CSV sweeps or key-value text. Exit codes: 0 success,
2 configuration error, 1 runtime error. Identical configs and seeds
produce byte-identical outputs.
"""

import argparse
import sys

from . import files
from .analysis import (
    bound_inputs_from_profile,
    degree_fraction_oracle,
    empirical_bound_inputs,
    fit_tail_exponent,
    modularity_lower_bound_ab,
    modularity_lower_bound_general,
    predict_beta_g,
    predict_beta_h,
)
from .config import ConfigError, parse_experiment_config, parse_model_config
from .experiments import run_experiment
from .genh import HParams, generate_h
from .geng import GParams, expected_cardinality_size_pmf, generate_g
from .louvain import detect_communities
from .modularity import (
    CardinalityProfile,
    flatten,
    hypergraph_modularity_score,
    weighted_graph_modularity,
)


def _print_kv(pairs, out=None):
    out = out if out is not None else sys.stdout
    for key, value in pairs:
        out.write(f"{key}: {files.format_value(value)}\n")


def _stats_rows(stats):
    return [(t, v, e, d, w) for (t, v, e, d, w) in stats.records]


def _cmd_generate_h(args):
    params = parse_model_config(args.config)
    if not isinstance(params, HParams):
        raise ConfigError("generate-h needs a 'model: h' config")
    if args.steps is not None:
        params.steps = args.steps
    h, stats = generate_h(params, args.seed)
    files.write_hypergraph(h, args.out)
    if args.stats:
        files.write_csv(
            args.stats,
            ["t", "vertices", "edges", "degree_sum", "weight_sum"],
            _stats_rows(stats),
        )
    _print_kv([
        ("vertices", h.num_vertices),
        ("edges", h.num_edges),
        ("degree_sum", h.degree_sum),
    ])
    return 0


def _cmd_generate_g(args):
    params = parse_model_config(args.config)
    if not isinstance(params, GParams):
        raise ConfigError("generate-g needs a 'model: g' config")
    if args.steps is not None:
        params.steps = args.steps
    g, stats = generate_g(params, args.seed)
    files.write_hypergraph(g, args.out)
    if args.communities:
        files.write_labels(g.community, args.communities)
    if args.stats:
        rows = []
        for (t, v, e, d), (_, sizes, degs) in zip(stats.records, stats.community_records):
            rows.append((t, v, e, d, *sizes, *degs))
        r = params.num_communities
        header = ["t", "vertices", "edges", "degree_sum"]
        header += [f"size_{j}" for j in range(r)] + [f"deg_{j}" for j in range(r)]
        files.write_csv(args.stats, header, rows)
    _print_kv([
        ("vertices", g.num_vertices),
        ("edges", g.num_edges),
        ("degree_sum", g.degree_sum),
    ])
    return 0


def _cmd_modularity(args):
    h = files.parse_hypergraph(args.input)
    part = files.parse_partition(args.partition, h.num_vertices)
    result = hypergraph_modularity_score(h, part)
    _print_kv([
        ("score", result.score),
        ("edge_contribution", result.edge_contribution),
        ("degree_tax", result.degree_tax),
        ("blocks", part.num_blocks),
    ])
    return 0


def _cmd_detect(args):
    h = files.parse_hypergraph(args.input)
    wg = flatten(h)
    part = detect_communities(wg, seed=args.seed, max_levels=args.max_levels)
    if args.out:
        files.write_partition(part, args.out)
    _print_kv([
        ("blocks", part.num_blocks),
        ("score", hypergraph_modularity_score(h, part).score),
        ("flattened_score", weighted_graph_modularity(wg, part)),
    ])
    return 0


def _cmd_flatten(args):
    h = files.parse_hypergraph(args.input)
    files.write_weighted_graph_csv(flatten(h), args.out)
    return 0


def _cmd_fit_powerlaw(args):
    h = files.parse_hypergraph(args.input)
    fit = fit_tail_exponent(h.degree_histogram(), k_min=args.kmin)
    _print_kv([
        ("beta_hat", fit.beta_hat),
        ("k_min", fit.k_min),
        ("n_tail", fit.n_tail),
        ("stderr", fit.stderr),
    ])
    return 0


def _cmd_predict(args):
    params = parse_model_config(args.config)
    if isinstance(params, HParams):
        pred = predict_beta_h(params)
        _print_kv([
            ("beta", pred.beta),
            ("vertex_rate", pred.vertex_rate),
            ("degree_rate", pred.degree_rate),
            ("tail_ratio", pred.tail_ratio),
            ("amplitude", pred.amplitude),
        ])
    else:
        beta, per_community = predict_beta_g(params)
        pairs = [("beta", beta)]
        pairs += [(f"beta_{j}", b) for j, b in enumerate(per_community)]
        _print_kv(pairs)
    return 0


def _cmd_bounds(args):
    params = parse_model_config(args.config)
    if not isinstance(params, GParams):
        raise ConfigError("bounds needs a 'model: g' config")
    if args.input:
        h = files.parse_hypergraph(args.input)
        if not args.communities:
            raise ConfigError("--input also needs --communities for the labels")
        labels = files.parse_labels(args.communities, h.num_vertices)
        h.set_communities(labels, params.num_communities)
        inputs = empirical_bound_inputs(h)
    else:
        pmf = expected_cardinality_size_pmf(params)
        delta = sum(ell * p for ell, p in pmf.items())
        card = CardinalityProfile(pmf, delta)
        inputs = bound_inputs_from_profile(params.profile, card)
    general = modularity_lower_bound_general(inputs)
    relaxed = modularity_lower_bound_ab(
        inputs.alpha_noise, inputs.beta_max, inputs.profile,
        inputs.max_cardinality, inputs.num_communities,
    )
    _print_kv([
        ("lemma3_bound", general),
        ("lemma4_bound", relaxed),
        ("alpha_noise", inputs.alpha_noise),
        ("beta_max", inputs.beta_max),
    ])
    return 0


def _cmd_oracle(args):
    params = parse_model_config(args.config)
    if not isinstance(params, HParams):
        raise ConfigError("oracle needs a 'model: h' config")
    table = degree_fraction_oracle(params, args.kmax)
    rows = [
        (k, table.limits[k], table.per_vertex[k])
        for k in range(args.kmax + 1)
    ]
    files.write_csv(args.out, ["k", "limit_fraction", "per_vertex_fraction"], rows)
    return 0


def _cmd_experiment(args):
    spec = parse_experiment_config(args.config)
    run_experiment(spec, args.seed, args.out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hypermod",
        description="Preferential-attachment hypergraphs with communities: "
        "generation, modularity and power-law analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate-h", help="run the general growth model")
    p.add_argument("--config", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--out", required=True)
    p.add_argument("--stats", default=None)
    p.set_defaults(func=_cmd_generate_h)

    p = sub.add_parser("generate-g", help="run the community-structured model")
    p.add_argument("--config", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--out", required=True)
    p.add_argument("--communities", default=None)
    p.add_argument("--stats", default=None)
    p.set_defaults(func=_cmd_generate_g)

    p = sub.add_parser("modularity", help="score a partition on a hypergraph")
    p.add_argument("--input", required=True)
    p.add_argument("--partition", required=True)
    p.set_defaults(func=_cmd_modularity)

    p = sub.add_parser("detect", help="flatten and detect communities")
    p.add_argument("--input", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-levels", type=int, default=32)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_detect)

    p = sub.add_parser("flatten", help="write the weighted clique expansion as CSV")
    p.add_argument("--input", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_flatten)

    p = sub.add_parser("fit-powerlaw", help="fit a degree-tail exponent")
    p.add_argument("--input", required=True)
    p.add_argument("--kmin", type=int, default=None)
    p.set_defaults(func=_cmd_fit_powerlaw)

    p = sub.add_parser("predict", help="closed-form exponent prediction")
    p.add_argument("--config", required=True)
    p.set_defaults(func=_cmd_predict)

    p = sub.add_parser("bounds", help="modularity lower bounds")
    p.add_argument("--config", required=True)
    p.add_argument("--input", default=None, help="measured inputs from this hyperedge list")
    p.add_argument("--communities", default=None)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("oracle", help="exact degree-fraction table as CSV")
    p.add_argument("--config", required=True)
    p.add_argument("--kmax", type=int, default=20)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("experiment", help="run a sweep described by a config")
    p.add_argument("--config", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_experiment)

    return parser


def run_cli(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()

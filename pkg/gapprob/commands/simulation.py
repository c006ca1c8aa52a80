from gapprob.exact import decimal_string
from gapprob.gapcount import gap_probability
from gapprob.montecarlo import SimConfig, simulate
from gapprob.util import cli_common


def cmd_simulate(args):
    spec = cli_common.spec_from_args(args.parser, args)
    digits = cli_common.digits_of(args)
    report = simulate(SimConfig(spec=spec, k=args.k, topo=args.topo, trials=args.trials, seed=args.seed),
                      workers=args.threads)
    exact = gap_probability(spec, args.k, args.topo).p
    sigmas = (abs(report.estimate - float(exact)) / report.standard_error(float(exact))
              if 0 < exact.value < 1 else 0.0)
    payload = {
        'n': spec.n, 'm': spec.m, 'k': args.k, 'topo': args.topo.value,
        'trials': report.trials, 'seed': str(report.seed), 'workers': report.workers,
        'hits': report.hits, 'estimate': report.estimate,
        'ci_low': report.ci_low, 'ci_high': report.ci_high,
        'exact': cli_common.prob_json(exact, digits),
    }
    text = '\n'.join([
        f'estimate {report.estimate:.{digits}f} ({report.hits}/{report.trials}), '
        f'95% CI [{report.ci_low:.{digits}f}, {report.ci_high:.{digits}f}]',
        f'exact    {exact.render(digits)} ({sigmas:.2f} standard errors away)',
        f'seed {report.seed}, {report.workers} worker(s), {report.blocks} block(s)',
    ])
    rows = [[spec.n, spec.m, args.k, args.topo, report.trials, report.seed, report.hits,
             report.estimate, report.ci_low, report.ci_high, decimal_string(exact.value, digits)]]
    cli_common.emit(args.format, payload=payload, text=text, rows=rows,
                    headers=['n', 'm', 'k', 'topo', 'trials', 'seed', 'hits', 'estimate', 'ci_low', 'ci_high',
                             'exact'])
    return cli_common.EXIT_OK


def setup(subparsers):
    sim = subparsers.add_parser('simulate', help='Monte Carlo estimate of the gap probability')
    cli_common.add_draw_arguments(sim)
    sim.add_argument('--trials', type=cli_common.positive_int, default=1_000_000)
    sim.add_argument('--seed', type=cli_common.non_negative_int, default=0)
    cli_common.add_threads_argument(sim)
    sim.set_defaults(handler=cmd_simulate, parser=sim)

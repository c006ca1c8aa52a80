from gapprob import constants
from gapprob.gapcount import Topology
from gapprob.oracle import adjudicate_cycle, cached_distribution, enumerate_distribution
from gapprob.recurrence import crosscheck, dp_f
from gapprob.util import cli_common


def cmd_crosscheck(args):
    result = crosscheck(args.max_n, args.max_m)
    payload = {'max_n': args.max_n, 'max_m': args.max_m, 'cells': result.cells,
               'status': 'PASS' if result.passed else 'FAIL'}
    if result.passed:
        text = f'PASS: recurrence, series and closed form agree on all {result.cells} cells'
    else:
        n, m, dp, series, closed = result.mismatch
        payload['mismatch'] = {'n': n, 'm': m, 'dp': str(dp), 'series': str(series), 'closed': str(closed)}
        text = f'FAIL at f({n},{m}): recurrence {dp}, series {series}, closed form {closed}'

    headers, rows = ['status', 'cells'], [[payload['status'], result.cells]]
    if args.show:
        table = dp_f(args.max_n, args.max_m)
        text += '\n' + cli_common.format_table(['n'] + [f'm={m}' for m in range(args.max_m + 1)],
                                                 [[n] + list(row) for n, row in table.rows()])
        payload['table'] = [[str(v) for v in row] for _, row in table.rows()]
    cli_common.emit(args.format, payload=payload, text=text, headers=headers, rows=rows)
    return cli_common.EXIT_OK if result.passed else cli_common.EXIT_USAGE


def _distribution(args, spec, topo):
    kwargs = {'budget': args.budget, 'workers': args.threads}
    if constants.USE_DISTRIBUTION_CACHE:
        return cached_distribution(spec, topo, forced=args.refresh, **kwargs)
    return enumerate_distribution(spec, topo, **kwargs)


def cmd_enumerate(args):
    spec = cli_common.spec_from_args(args.parser, args)
    distribution = _distribution(args, spec, args.topo)
    rows = [[k, c, distribution.tail(k)] for k, c in sorted(distribution.counts.items())]
    if distribution.no_pair:
        rows.append(['no-pair', distribution.no_pair, ''])
    payload = dict(distribution.to_json(),
                   counts={str(k): str(c) for k, c in sorted(distribution.counts.items())},
                   total=str(distribution.total), no_pair=str(distribution.no_pair))
    text = cli_common.format_table(['min gap', 'count', 'at least'], rows) + f'\ntotal  {distribution.total}'
    cli_common.emit(args.format, payload=payload, text=text, headers=['min_gap', 'count', 'tail'], rows=rows)
    return cli_common.EXIT_OK


def cmd_erratum(args):
    spec = cli_common.spec_from_args(args.parser, args)
    digits = cli_common.digits_of(args)
    rows = adjudicate_cycle(spec, args.k_max, distribution=_distribution(args, spec, Topology.CYCLE))
    headers = ['k', 'enumerated', 'recurrence', 'printed_formula', 'p_enumerated', 'p_printed_formula',
               'published', 'published_reproduced']
    table = [[row.k, row.oracle, row.recurrence, row.printed, row.oracle_prob.render(digits),
              row.printed_prob.render(digits), row.published or '',
              {True: 'yes', False: 'no', None: ''}[row.published_reproduced]] for row in rows]
    confirmed = all(row.recurrence_confirmed for row in rows)
    summary = [f'Ring recurrence {"confirmed" if confirmed else "CONTRADICTED"} by enumeration for k = 1..{args.k_max}']
    for row in rows:
        if row.published_reproduced is False:
            summary.append(f'k={row.k}: published {row.published} not reproduced; '
                           f'enumeration gives {row.oracle_prob.render(6)}')
    payload = {
        'n': spec.n, 'm': spec.m, 'recurrence_confirmed': confirmed,
        'rows': [{
            'k': row.k, 'enumerated': str(row.oracle), 'recurrence': str(row.recurrence),
            'printed_formula': str(row.printed),
            'p_enumerated': cli_common.prob_json(row.oracle_prob, digits),
            'p_printed_formula': cli_common.prob_json(row.printed_prob, digits),
            'published': row.published, 'published_reproduced': row.published_reproduced,
        } for row in rows],
    }
    text = cli_common.format_table(headers, table) + '\n' + '\n'.join(summary)
    cli_common.emit(args.format, payload=payload, text=text, headers=headers, rows=table)
    return cli_common.EXIT_OK if confirmed else cli_common.EXIT_USAGE


def _add_enumeration_arguments(parser):
    parser.add_argument('--budget', type=cli_common.positive_int, default=None,
                        help=f'largest number of subsets to visit (default {constants.ENUMERATION_BUDGET})')
    parser.add_argument('--refresh', action='store_true', help='ignore cached distributions')
    cli_common.add_threads_argument(parser)


def setup(subparsers):
    check = subparsers.add_parser('crosscheck', help='recurrence vs generating function vs closed form')
    check.add_argument('--max-n', type=cli_common.non_negative_int, default=60)
    check.add_argument('--max-m', type=cli_common.non_negative_int, default=12)
    check.add_argument('--show', action='store_true', help='print the table of f(n, m)')
    cli_common.add_output_arguments(check)
    check.set_defaults(handler=cmd_crosscheck, parser=check)

    enum_parser = subparsers.add_parser('enumerate', help='exact min-gap distribution by exhaustive enumeration')
    cli_common.add_draw_arguments(enum_parser, k=False)
    _add_enumeration_arguments(enum_parser)
    enum_parser.set_defaults(handler=cmd_enumerate, parser=enum_parser)

    erratum = subparsers.add_parser('erratum', help='settle the ring counts against enumeration')
    cli_common.add_draw_arguments(erratum, k=False, topo=False)
    erratum.add_argument('--k-max', type=cli_common.positive_int, default=10)
    _add_enumeration_arguments(erratum)
    erratum.set_defaults(handler=cmd_erratum, parser=erratum)

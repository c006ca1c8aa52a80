from gapprob.ingest import audit, read_draws
from gapprob.util import cli_common


def cmd_audit(args):
    spec = cli_common.spec_from_args(args.parser, args)
    digits = cli_common.digits_of(args)
    report = audit(read_draws(args.file, spec), args.topo, args.k_max)
    headers = ['k', 'hits', 'empirical', 'exact', 'deviation', 'ci_low', 'ci_high', 'covered']
    rows = [[row.k, row.hits, f'{row.empirical_freq:.{digits}f}', row.exact.render(digits),
             f'{row.deviation:.{digits}f}', f'{row.ci_low:.{digits}f}', f'{row.ci_high:.{digits}f}',
             'yes' if row.covered else 'no'] for row in report.rows]
    payload = {
        'n': spec.n, 'm': spec.m, 'topo': report.topo.value, 'draws': report.draws,
        'rows': [{
            'k': row.k, 'hits': row.hits, 'empirical_freq': row.empirical_freq,
            'exact': cli_common.prob_json(row.exact, digits), 'deviation': row.deviation,
            'ci_low': row.ci_low, 'ci_high': row.ci_high, 'covered': row.covered,
        } for row in report.rows],
    }
    text = (f'{report.draws} draws of {spec} on the {report.topo}\n' + cli_common.format_table(headers, rows))
    cli_common.emit(args.format, payload=payload, text=text, headers=headers, rows=rows)
    return cli_common.EXIT_OK


def setup(subparsers):
    parser = subparsers.add_parser('audit', help='compare a draw history with the exact probabilities')
    parser.add_argument('file', help='CSV file of draws: label,v1,...,vm')
    cli_common.add_draw_arguments(parser, k=False)
    parser.add_argument('--k-max', type=cli_common.positive_int, default=8)
    parser.set_defaults(handler=cmd_audit, parser=parser)

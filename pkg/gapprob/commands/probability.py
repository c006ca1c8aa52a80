from gapprob.gapcount import Topology, gap_probability, gap_probability_printed
from gapprob.oracle import published_cycle_value
from gapprob.util import cli_common


def cmd_prob(args):
    spec = cli_common.spec_from_args(args.parser, args)
    digits = cli_common.digits_of(args)
    result = gap_probability(spec, args.k, args.topo)
    payload = {
        'n': spec.n, 'm': spec.m, 'k': args.k, 'topo': args.topo.value,
        'p': cli_common.prob_json(result.p, digits),
        'q': cli_common.prob_json(result.q, digits),
        'degenerate': result.degenerate,
    }
    rows = [[spec.n, spec.m, args.k, args.topo, result.p.render(digits), result.p.fraction_string(),
             result.q.render(digits), result.q.fraction_string()]]
    text = '\n'.join([
        result.p.render(digits),
        f'p = {result.p.fraction_string()}',
        f'q = {result.q.render(digits)} = {result.q.fraction_string()}',
    ] + (['(fewer than two numbers drawn: no pair can be close)'] if result.degenerate else []))
    cli_common.emit(args.format, payload=payload, text=text,
                    headers=['n', 'm', 'k', 'topo', 'p', 'p_exact', 'q', 'q_exact'], rows=rows)
    return cli_common.EXIT_OK


def cmd_table(args):
    spec = cli_common.spec_from_args(args.parser, args)
    digits = cli_common.digits_of(args)
    headers = ['k', 'line', 'cycle'] + (['cycle_printed'] if args.printed_compat else []) + ['differs']
    rows, entries = [], []
    for k in range(1, args.k_max + 1):
        line = gap_probability(spec, k, Topology.LINE).p
        cycle = gap_probability(spec, k, Topology.CYCLE).p
        published = published_cycle_value(spec, k)
        differs = published is not None and cycle.render(6) != published
        entry = {'k': k, 'line': cli_common.prob_json(line, digits), 'cycle': cli_common.prob_json(cycle, digits),
                 'differs_from_published': differs}
        row = [k, line.render(digits), cycle.render(digits)]
        if args.printed_compat:
            printed = gap_probability_printed(spec, k).p
            entry['cycle_printed'] = cli_common.prob_json(printed, digits)
            row.append(printed.render(digits))
        row.append('*' if differs else '')
        rows.append(row)
        entries.append(entry)

    text = cli_common.format_table(headers[:-1] + [''], rows)
    if any(row[-1] for row in rows):
        text += ('\n* differs from the published circle column, which follows the ring formula printed '
                 'without the (k-1) factor; run `erratum` for the enumeration check')
    cli_common.emit(args.format, payload={'n': spec.n, 'm': spec.m, 'rows': entries}, text=text,
                    headers=headers, rows=rows)
    return cli_common.EXIT_OK


def setup(subparsers):
    prob = subparsers.add_parser('prob', help='probability that two drawn numbers are closer than k')
    cli_common.add_draw_arguments(prob)
    prob.set_defaults(handler=cmd_prob, parser=prob)

    table = subparsers.add_parser('table', help='line and ring probabilities for k = 1..k_max')
    cli_common.add_draw_arguments(table, k=False, topo=False)
    table.add_argument('--k-max', type=cli_common.positive_int, default=10)
    table.add_argument('--printed-compat', '--paper-compat', dest='printed_compat', action='store_true',
                       help='add the ring column computed with the printed formula')
    table.set_defaults(handler=cmd_table, parser=table)

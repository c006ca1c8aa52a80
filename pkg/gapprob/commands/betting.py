import argparse

from gapprob.exact import decimal_string
from gapprob.ev import game_ev, scan_near_fair
from gapprob.util import cli_common


def _n_range(text):
    low, _, high = text.partition(':')
    try:
        low, high = int(low), int(high)
    except ValueError:
        raise argparse.ArgumentTypeError(f'{text!r} is not a range like 10:100') from None
    if not 1 <= low <= high:
        raise argparse.ArgumentTypeError(f'{text!r} is not an increasing positive range')
    return range(low, high + 1)


def _report_json(report, digits):
    return {
        'n': report.spec.n, 'm': report.spec.m, 'k': report.k, 'topo': report.topo.value,
        'win_prob': cli_common.prob_json(report.win_prob, digits),
        'ev_per_unit_stake': cli_common.rational_json(report.ev_per_unit_stake, digits),
        'house_edge': cli_common.rational_json(report.house_edge, digits),
        'stake': str(report.stake),
        'ev': cli_common.rational_json(report.ev, digits),
        'advantaged_party': report.advantaged_party.value,
    }


def _report_row(report, digits):
    return [report.spec.n, report.spec.m, report.k, report.topo, report.win_prob.render(digits),
            decimal_string(report.ev_per_unit_stake, digits), decimal_string(report.house_edge, digits),
            report.advantaged_party]


_HEADERS = ['n', 'm', 'k', 'topo', 'win_prob', 'ev', 'house_edge', 'advantaged']


def cmd_ev(args):
    digits = cli_common.digits_of(args)
    if args.scan:
        reports = scan_near_fair(args.m, args.scan, args.k, args.topo, limit=args.limit)
        rows = [_report_row(report, digits) for report in reports]
        cli_common.emit(args.format, payload={'games': [_report_json(r, digits) for r in reports]},
                        headers=_HEADERS, rows=rows)
        return cli_common.EXIT_OK

    spec = cli_common.spec_from_args(args.parser, args)
    report = game_ev(spec, args.k, args.topo, stake=args.stake)
    text = '\n'.join([
        f'win probability {report.win_prob.render(digits)} = {report.win_prob.fraction_string()}',
        f'player EV per unit stake {decimal_string(report.ev_per_unit_stake, digits)} '
        f'= {report.ev_per_unit_stake}',
        f'house edge {decimal_string(report.house_edge, digits)}',
        f'advantage: {report.advantaged_party}',
    ] + ([f'EV at stake {report.stake}: {decimal_string(report.ev, digits)}'] if report.stake != 1 else []))
    cli_common.emit(args.format, payload=_report_json(report, digits), text=text,
                    headers=_HEADERS, rows=[_report_row(report, digits)])
    return cli_common.EXIT_OK


def setup(subparsers):
    ev = subparsers.add_parser('ev', help='expected value of the even-money bet on a close pair')
    cli_common.add_draw_arguments(ev)
    ev.add_argument('--stake', type=cli_common.positive_int, default=1)
    ev.add_argument('--scan', type=_n_range, default=None, metavar='LOW:HIGH',
                    help='rank pool sizes in LOW..HIGH by closeness to a fair game (ignores -n)')
    ev.add_argument('--limit', type=cli_common.positive_int, default=None)
    ev.set_defaults(handler=cmd_ev, parser=ev)

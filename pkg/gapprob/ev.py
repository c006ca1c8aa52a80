"""Expected value of the even-money bet "the draw contains two numbers at
distance less than k".

The player stakes one unit and wins one unit when the event happens, so the
player's edge is 2p - 1 and the house edge is 1 - 2p.
"""
import enum
import logging
from dataclasses import dataclass
from fractions import Fraction

from gapprob.errors import GapProbError
from gapprob.exact import ExactProb, decimal_string
from gapprob.gapcount import DrawSpec, Topology, gap_probability

logger = logging.getLogger(__name__)


class DegenerateDraw(GapProbError):
    def __init__(self, spec):
        super().__init__(f'A draw of {spec.m} number(s) has no pair to bet on')


class Party(enum.Enum):
    HOUSE = 'house'
    PLAYER = 'player'
    FAIR = 'fair'

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class EvReport:
    spec: DrawSpec
    k: int
    topo: Topology
    win_prob: ExactProb
    ev_per_unit_stake: Fraction
    stake: Fraction = Fraction(1)

    @property
    def house_edge(self):
        return -self.ev_per_unit_stake

    @property
    def ev(self):
        """Expected player gain for the configured stake."""
        return self.ev_per_unit_stake * self.stake

    @property
    def advantaged_party(self):
        if self.ev_per_unit_stake > 0:
            return Party.PLAYER
        if self.ev_per_unit_stake < 0:
            return Party.HOUSE
        return Party.FAIR

    def describe(self, digits=6):
        return (f'P(win) = {self.win_prob.render(digits)}, EV per unit = '
                f'{decimal_string(self.ev_per_unit_stake, digits)}, advantage: {self.advantaged_party}')


def ev_from_probability(win_prob):
    return 2 * win_prob.value - 1


def game_ev(spec, k, topo=Topology.LINE, *, stake=1):
    if spec.m < 2:
        raise DegenerateDraw(spec)
    win_prob = gap_probability(spec, k, topo).p
    report = EvReport(spec=spec, k=k, topo=topo, win_prob=win_prob,
                      ev_per_unit_stake=ev_from_probability(win_prob), stake=Fraction(stake))
    logger.debug(f'{spec}, k={k}, {topo}: {report.describe()}')
    return report


def scan_near_fair(m, n_values, k=2, topo=Topology.LINE, *, limit=None):
    """Rank pool sizes by how close the bet comes to fair, closest first.

    Ties are broken by the smaller pool.
    """
    reports = [game_ev(DrawSpec(n, m), k, topo) for n in n_values if n >= max(m, 2)]
    reports.sort(key=lambda report: (abs(report.ev_per_unit_stake), report.spec.n))
    return reports[:limit] if limit else reports

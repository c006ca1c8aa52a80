import io
import random

import hypothesis.strategies as st
import pytest
from hypothesis import given

from gapprob.gapcount import DrawSpec, Subset, Topology
from gapprob.ingest import (DrawRecord, DuplicateNumber, EmptyHistory, InconsistentHistory, MalformedLine,
                            OutOfRangeNumber, UndecodableLine, UnreadableHistory, WrongCount, audit, parse_draws,
                            read_draws, serialize_draws)
from gapprob.montecarlo import sample_history

HISTORY = """# label,numbers
2004-11-06,3,7,12,19,25,31

2004-11-13, 31 ,2,44,45,9,17
"""


def _records(spec, count, seed):
    return [DrawRecord(str(i), subset) for i, subset in enumerate(sample_history(spec, count, seed))]


class TestParse(object):
    def test_history(self, lotto):
        records = parse_draws(io.StringIO(HISTORY), lotto)
        assert [record.label for record in records] == ['2004-11-06', '2004-11-13']
        assert records[1].numbers.values == (2, 9, 17, 31, 44, 45)
        assert [record.line_number for record in records] == [2, 4]

    @pytest.mark.parametrize('line,error', [
        ('d,1,2,3,4,5,x', MalformedLine),
        ('d,1_0,2,3,4,5,6', MalformedLine),
        ('d,+1,2,3,4,5,6', MalformedLine),
        ('d,-1,2,3,4,5,6', MalformedLine),
        ('d,\u0663,2,4,5,6,7', MalformedLine),
        ('d,,2,3,4,5,6', MalformedLine),
        (',1,2,3,4,5,6', MalformedLine),
        ('d,1,2,3,4,5,50', OutOfRangeNumber),
        ('d,0,2,3,4,5,6', OutOfRangeNumber),
        ('d,1,2,3,4,5,5', DuplicateNumber),
        ('d,1,2,3', WrongCount),
        ('d,1,2,3,4,5,6,7', WrongCount),
    ])
    def test_errors_name_the_line(self, lotto, line, error):
        with pytest.raises(error) as info:
            parse_draws(io.StringIO(f'# header\nok,1,2,3,4,5,6\n{line}\n'), lotto)
        assert info.value.line_number == 3
        assert str(info.value).startswith('line 3:')

    def test_serialized_history_parses_back(self, lotto):
        records = parse_draws(io.StringIO(HISTORY), lotto)
        text = serialize_draws(records)
        assert text.splitlines()[1] == '2004-11-13,2,9,17,31,44,45'
        assert parse_draws(io.StringIO(text), lotto) == records

    def test_read_file(self, lotto, tmp_path):
        path = tmp_path / 'draws.csv'
        path.write_text(HISTORY, encoding='utf-8')
        assert len(read_draws(path, lotto)) == 2

    def test_label_is_kept_verbatim(self, lotto):
        text = '"q" draw,6,5,4,3,2,1\n'
        records = parse_draws(io.StringIO(text), lotto)
        assert records[0].label == '"q" draw'
        assert serialize_draws(records) == '"q" draw,1,2,3,4,5,6\n'

    @given(st.data())
    def test_serialize_normalizes_any_valid_history(self, data):
        lotto = DrawSpec(49, 6)
        labels = st.text(st.characters(blacklist_categories=('Cs', 'Cc'), blacklist_characters=','), min_size=1)
        rows = data.draw(st.lists(st.tuples(labels.filter(lambda s: s == s.strip() and not s.startswith('#')),
                                            st.lists(st.integers(1, 49), min_size=6, max_size=6, unique=True)),
                                  max_size=20))
        shuffled = []
        for label, numbers in rows:
            numbers = list(numbers)
            random.Random(data.draw(st.integers())).shuffle(numbers)
            shuffled.append(f'{label},{",".join(map(str, numbers))}\n')
        normalized = ''.join(f'{label},{",".join(map(str, sorted(numbers)))}\n' for label, numbers in rows)
        records = parse_draws(io.StringIO(''.join(shuffled)), lotto)
        assert serialize_draws(records) == normalized
        assert parse_draws(io.StringIO(normalized), lotto) == records


class TestReadFile(object):
    def test_missing_file(self, lotto, tmp_path):
        with pytest.raises(UnreadableHistory):
            read_draws(tmp_path / 'absent.csv', lotto)

    def test_directory(self, lotto, tmp_path):
        with pytest.raises(UnreadableHistory):
            read_draws(tmp_path, lotto)

    @pytest.mark.parametrize('content,line_number', [
        (b'\xff\xfe1,2,3\n', 1),
        (b'a,1,2,3,4,5,6\nb,1,2,3,4,5,\xe96\n', 2),
    ])
    def test_bytes_that_are_not_utf8(self, lotto, tmp_path, content, line_number):
        path = tmp_path / 'draws.csv'
        path.write_bytes(content)
        with pytest.raises(UndecodableLine) as info:
            read_draws(path, lotto)
        assert info.value.line_number == line_number

    def test_byte_order_mark_and_crlf(self, lotto, tmp_path):
        path = tmp_path / 'draws.csv'
        path.write_bytes('\ufeffa,1,2,3,4,5,6\r\nb,7,8,9,10,11,12\r\n'.encode('utf-8'))
        assert [record.label for record in read_draws(path, lotto)] == ['a', 'b']


class TestAudit(object):
    def test_single_draw(self, lotto):
        report = audit([DrawRecord('only', Subset((3, 7, 12, 19, 25, 31), 49))])
        hits = [row.hits for row in report.rows]
        assert hits == [0, 0, 0, 0, 1, 1, 1, 1]
        assert report.rows[0].exact.value == 0
        assert report.rows[0].covered

    def test_ring_counts_the_wraparound(self):
        report = audit([DrawRecord('wrap', Subset((1, 5, 10), 10))], Topology.CYCLE, k_max=3)
        assert [row.hits for row in report.rows] == [0, 1, 1]

    def test_empty(self):
        with pytest.raises(EmptyHistory):
            audit([])

    def test_mixed_draw_sizes(self):
        with pytest.raises(InconsistentHistory):
            audit([DrawRecord('a', Subset((1, 2), 10)), DrawRecord('b', Subset((1, 2, 3), 10))])

    @pytest.mark.parametrize('topo', list(Topology))
    def test_synthetic_history_agrees(self, lotto, topo):
        report = audit(_records(lotto, 10_000, seed=17), topo)
        assert report.draws == 10_000
        freqs = [row.empirical_freq for row in report.rows]
        assert freqs == sorted(freqs) and freqs[0] == 0
        for row in report.rows:
            p = float(row.exact)
            assert row.deviation <= 5 * (p * (1 - p) / row.draws) ** 0.5 + 1 / row.draws, row.k
        assert len(report.uncovered()) <= 2

    def test_deviation_shrinks_with_history_length(self, lotto):
        short = audit(_records(lotto, 1_000, seed=23))
        long = audit(_records(lotto, 100_000, seed=23))
        assert max(row.deviation for row in long.rows) < 0.01
        assert sum(row.deviation for row in long.rows) < sum(row.deviation for row in short.rows)

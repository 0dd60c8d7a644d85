import pytest

from dynorient import (
    Engine,
    InputError,
    Insert,
    Thresholds,
    discrepancy_report,
)
from dynorient.core import OrientationBook


class TestThresholds:
    @pytest.mark.parametrize(
        "n,log,scm,gm",
        [
            (8, 3, 6, 7),
            (2, 1, 2, 3),
            (1, 1, 2, 3),
            (1000, 10, 20, 21),
            (3, 2, 4, 5),
            (4096, 12, 24, 25),
        ],
    )
    def test_values(self, n, log, scm, gm):
        t = Thresholds.for_size(n)
        assert (t.log, t.short_cycle_max, t.girth_min) == (log, scm, gm)

    def test_zero_size_rejected(self):
        with pytest.raises(InputError):
            Thresholds.for_size(0)

    def test_relation(self):
        for n in range(1, 50):
            t = Thresholds.for_size(n)
            assert t.girth_min == t.short_cycle_max + 1
            assert t.log >= 1


class TestDiscrepancy:
    def test_single_edge(self):
        rep = discrepancy_report({0: (0, 1)})
        assert rep.per_vertex == {0: 1, 1: 1}
        assert rep.max == 1

    def test_triangle(self):
        rep = discrepancy_report({0: (0, 1), 1: (1, 2), 2: (2, 0)})
        assert rep.per_vertex == {0: 0, 1: 0, 2: 0}
        assert rep.max == 0

    def test_star(self):
        rep = discrepancy_report({0: (0, 1), 1: (0, 2), 2: (0, 3)})
        assert rep.per_vertex[0] == 3
        assert rep.per_vertex[1] == 1
        assert rep.max == 3

    def test_empty(self):
        assert discrepancy_report({}).max == 0


class TestOrientationBook:
    def test_net_and_hist_track_changes(self):
        book = OrientationBook(4)
        book.assign(0, 0, 1)
        book.assign(1, 0, 2)
        assert book.net == [2, -1, -1, 0]
        assert book.max_discrepancy() == 2
        book.flip(1)
        assert book.net == [0, -1, 1, 0]
        assert book.max_discrepancy() == 1
        book.drop(0)
        book.drop(1)
        assert book.net == [0, 0, 0, 0]
        assert book.max_discrepancy() == 0

    def test_journal_diff_excludes_new_and_deleted(self):
        book = OrientationBook(4)
        book.assign(0, 0, 1)
        book.begin_update()
        book.assign(1, 2, 3)  # new edge: free
        book.flip(0)
        book.assign(2, 1, 2)
        book.drop(2)  # deleted within the update: free
        assert book.end_update() == [0]

    def test_flip_back_is_not_recourse(self):
        book = OrientationBook(2)
        book.assign(0, 0, 1)
        book.begin_update()
        book.flip(0)
        book.flip(0)
        assert book.end_update() == []


def test_edge_ids_strictly_increase():
    eng = Engine(4)
    ids = [eng.apply(Insert(0, 1)).assigned_id for _ in range(5)]
    assert ids == sorted(ids)
    assert len(set(ids)) == 5

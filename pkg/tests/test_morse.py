import pytest

from planemaps import CombinatorialMap, Mode, PlaneGraph, flow_structure_count, flow_summary
from planemaps.maps import faces


def test_segment_flow():
    f = flow_summary(PlaneGraph.rooted_at(CombinatorialMap((0, 1)), 0))
    assert (f.sources, f.saddles, f.sinks, f.euler_check) == (2, 1, 0, True)


def test_loop_flow():
    loop = CombinatorialMap((1, 0))
    for i in range(2):
        f = flow_summary(PlaneGraph.rooted_at(loop, i))
        assert (f.sources, f.saddles, f.sinks) == (1, 1, 1)
        assert f.euler_characteristic == 1


@pytest.mark.parametrize("e", [1, 2, 3, 4])
def test_disk_euler_characteristic(plane_catalogs, e):
    for mode in Mode:
        for x in plane_catalogs[(e, mode)].entries:
            assert x.flow.sources - x.flow.saddles + x.flow.sinks == 1
            assert x.flow.saddles == e
            assert x.flow == flow_summary(x.plane)


@pytest.mark.parametrize("e", [1, 2, 3])
def test_flow_count_is_plane_count(plane_catalogs, e):
    assert flow_structure_count(e) == len(plane_catalogs[(e, Mode.FULL)])
    assert flow_structure_count(e, Mode.ORIENTED) == len(plane_catalogs[(e, Mode.ORIENTED)])

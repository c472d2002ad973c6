"""
Test Suite for the Parallel Range Search
"""

import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from codes import build_code
from distance import exact_min_distance
from fields import field_new
from geometry import LatticePolytope
from tools.parallel_search import map_ranges, split_range


def test_split_range_covers_everything():
    for total, parts in [(10, 3), (7, 7), (5, 12), (1, 4), (100, 1)]:
        ranges = split_range(total, parts)
        assert ranges[0][0] == 0 and ranges[-1][1] == total
        assert all(a[1] == b[0] for a, b in zip(ranges, ranges[1:])), f"Gap in {ranges}"
        sizes = [stop - start for start, stop in ranges]
        assert max(sizes) - min(sizes) <= 1
        assert len(ranges) == min(parts, total)


def test_map_ranges_inline():
    results = map_ranges(lambda payload, start, stop: sum(range(start, stop)) * payload, 2, 10, jobs=1)
    assert results == [90]


def test_exact_search_with_worker_processes():
    """Process pool gives the same distance and witness as the inline scan"""
    code = build_code(LatticePolytope(((0, 0), (2, 0), (0, 2))), field_new(7))
    inline = exact_min_distance(code, jobs=1)
    pooled = exact_min_distance(code, jobs=2)
    assert pooled == inline

"""Smoke test for the gsatlas extension module.

Build and install first, e.g. `maturin develop -m crates/python/Cargo.toml`.
"""

import gsatlas


def main():
    path = gsatlas.Graph(3, [(0, 1), (1, 2)])
    assert path.to_graph6() == "Bg"
    assert gsatlas.Graph.from_graph6("Bg") == path
    triangle = path.local_complement(1)
    assert triangle.edge_count() == 3
    assert triangle.local_complement(1) == path
    assert sorted(path.lc_orbit()) == sorted({path.canonical_form(), triangle.canonical_form()})

    ring = gsatlas.Graph(6, [(i, (i + 1) % 6) for i in range(6)])
    assert ring.sr_max() == 3 and ring.min_vertex_cover() == 3
    assert ring.is_two_colorable()
    assert ring.measure(0, "Z").edge_count() == 4

    assert len(gsatlas.enumerate_connected(5)) == 21
    counts = [len(gsatlas.classify(n)) for n in range(2, 8)]
    assert counts == [1, 1, 2, 4, 11, 26], counts

    atlas = gsatlas.Atlas(8)
    rows = atlas.classes(8)
    assert len(rows) == 101
    first = rows[0]
    assert first["no"] == 46 and first["lc"] == 2 and first["ri4"] == [0, 0, 0, 35]
    star = gsatlas.Graph(8, [(0, i) for i in range(1, 8)])
    assert atlas.lookup(star)["no"] == 46
    ring8 = gsatlas.Graph(8, [(i, (i + 1) % 8) for i in range(8)])
    hit = atlas.lookup(ring8)
    assert (hit["es_lower"], hit["es_upper"]) == (4, 4)

    ok, report = gsatlas.verify(4)
    assert ok, report

    try:
        gsatlas.Graph(3, [(0, 5)])
    except IndexError:
        pass
    else:
        raise AssertionError("out-of-range edge accepted")
    print("smoke test ok")


if __name__ == "__main__":
    main()

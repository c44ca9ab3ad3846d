import xml.etree.ElementTree as ET

from textfriction import plots


def parse(svg: str) -> ET.Element:
    return ET.fromstring(svg)


def test_line_chart_svg():
    points = [(0, 1.0), (1, 4.0), (2, 2.5)]
    svg = plots.line_chart_svg(points, "trace", "window", "friction")
    root = parse(svg)
    assert root.get("width") == "720" and root.get("height") == "440"
    assert svg.count("<polyline") == 1
    assert "trace" in svg and "nan" not in svg
    assert svg == plots.line_chart_svg(points, "trace", "window", "friction")


def test_line_chart_degenerate_ranges():
    for points in ([(0, 5.0)], [(0, 3.0), (1, 3.0), (2, 3.0)]):
        svg = plots.line_chart_svg(points, "t", "x", "y")
        parse(svg)
        assert "nan" not in svg and "inf" not in svg


def test_scatter_chart_with_fit_line():
    points = [(1.0, 2.0), (3.0, 8.0), (5.0, 11.0)]
    bare = plots.scatter_chart_svg(points, "s", "x", "y")
    fitted = plots.scatter_chart_svg(points, "s", "x", "y", fit=(0.5, 2.0))
    parse(bare), parse(fitted)
    assert bare.count("<circle") == 3
    assert "firebrick" not in bare
    assert "firebrick" in fitted


def test_bar_chart_grouped():
    svg = plots.bar_chart_svg(["a.txt", "b.txt"],
                              {"measured": [50.0, 60.0], "predicted": [55.0, 58.0]},
                              "cmp", "text", "ease")
    parse(svg)
    # 4 data bars + 2 legend swatches
    assert svg.count("<rect") == 4 + 2 + 2  # + background and frame rects
    assert "measured" in svg and "predicted" in svg


def test_bar_chart_escapes_labels():
    svg = plots.bar_chart_svg(["x"], {"a<b&c": [1.0]}, "t<&>", "x", "y")
    parse(svg)
    assert "a&lt;b&amp;c" in svg


def test_histogram_svg():
    bins = ((0.0, 1), (2.0, 0), (4.0, 3))
    svg = plots.histogram_svg(bins, 2.0, "h", "stddev", "texts")
    parse(svg)
    assert svg.count("<rect") == 3 + 2  # bars + background/frame


def test_profile_tsv():
    tsv = plots.profile_tsv([1.5, 2.0])
    assert tsv == "window\tfriction\n0\t1.500000\n1\t2.000000\n"


def test_scatter_tsv():
    tsv = plots.scatter_tsv([("a.txt", 3000.0, 50.5)])
    assert tsv == "file\tmean_friction\tease\na.txt\t3000.000000\t50.500000\n"


def test_histogram_tsv():
    tsv = plots.histogram_tsv(((0.0, 1), (2.0, 3)))
    assert tsv == "bin_lower\tcount\n0.000000\t1\n2.000000\t3\n"


def test_comparison_tsv():
    tsv = plots.comparison_tsv([("a.txt", 50.0, 49.0)])
    assert tsv == "file\tmeasured_ease\tpredicted_ease\na.txt\t50.000000\t49.000000\n"

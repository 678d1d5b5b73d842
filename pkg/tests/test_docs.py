import glob
import exemplary

from soltes import INFINITE, Hypergraph, soltes_report, wiener


def test_docs():
    pathnames = ['README.md'] + glob.glob('docs/**/*.md', recursive=True)
    exemplary.run(pathnames, render=False)


def test_initial_example():
    H = Hypergraph(5, 3, [(0, 1, 2), (2, 3, 4)])
    assert wiener(H) == 14

    report = soltes_report(H)
    assert not report.verdict
    assert report.vertices[2].wiener_after is INFINITE

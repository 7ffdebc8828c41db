"""Full analysis of one family: census, colored graph, forbidden configurations, doubled graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .arrangement import Census, CircleFamily, DigonRecord, detect_digons_pairwise, digon_census
from .graph import (
    BothInternalAndExternal,
    ColoredGraph,
    LemmaReport,
    build_colored_graph,
    verify_bipartite_structure,
    verify_lemma_lenses,
    verify_lemma_lunes,
    verify_lemma_mixed,
)
from .sphere import GPrimeReport, build_doubled_graph, verify_gprime


@dataclass
class Analysis:
    family: CircleFamily
    digons: list
    census: Census
    graph: Optional[ColoredGraph] = None
    lemmas: list = field(default_factory=list)
    gprime: Optional[GPrimeReport] = None
    classification_error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return (self.census.ok
                and self.classification_error is None
                and all(rep.passed for rep in self.lemmas)
                and (self.gprime is None or self.gprime.passed))

    @property
    def failures(self) -> list[str]:
        out = list(self.census.violations)
        if self.classification_error:
            out.append(self.classification_error)
        out += [f"{rep.lemma}: {len(rep.violations)} violation(s)" for rep in self.lemmas if not rep.passed]
        if self.gprime is not None and not self.gprime.passed:
            out.append("doubled graph check failed")
        return out

    def as_dict(self) -> dict:
        out = {
            "census": self.census.as_dict(),
            "digons": [str(d) for d in self.digons],
        }
        if self.graph is not None:
            out["labels"] = [lab.value for lab in self.graph.labels]
            out["graph"] = {
                "red": [[e.i, e.j] for e in self.graph.red],
                "blue": [[e.i, e.j] for e in self.graph.blue],
                "degenerate": self.graph.degenerate,
                "both_colors": [list(p) for p in self.graph.both_colors],
            }
        if self.classification_error:
            out["classification_error"] = self.classification_error
        out["lemmas"] = {rep.lemma: rep.as_dict() for rep in self.lemmas}
        out["gprime"] = None if self.gprime is None else self.gprime.as_dict()
        out["ok"] = self.ok
        return out


def lemma_reports(g: ColoredGraph) -> list[LemmaReport]:
    return [verify_lemma_lunes(g), verify_lemma_lenses(g), verify_lemma_mixed(g),
            verify_bipartite_structure(g)]


def analyze(fam: CircleFamily, digons: Optional[list[DigonRecord]] = None, full: bool = True) -> Analysis:
    """Census only when ``full`` is false; otherwise every check that applies to ``fam``."""
    if digons is None:
        digons = detect_digons_pairwise(fam)
    result = Analysis(fam, digons, digon_census(fam, digons))
    if not full:
        return result
    try:
        g = build_colored_graph(fam, digons)
    except BothInternalAndExternal as exc:
        result.classification_error = str(exc)
        return result
    result.graph = g
    result.lemmas = lemma_reports(g)
    if not g.degenerate:
        result.gprime = verify_gprime(build_doubled_graph(g))
    return result

"""Small shared helpers for the test suite."""
from nakayama.complexes import PerfectComplex


def table_row(x: PerfectComplex) -> dict:
    return {d: sorted(x.term(d)) for d in x.degrees() if x.term(d)}

import random

from hypothesis import strategies as st

from polwalk.core import PolarizedGraph

_ACCEPTANCE: list[tuple[str, str, str]] = []


def random_graph(rng: random.Random, S: int, A: int) -> PolarizedGraph:
    """Connected multigraph with uniformly shuffled rotations."""
    slots = [(u, w) for u in range(S) for w in range(u, S)]
    while True:
        edges = [rng.choice(slots) for _ in range(A)]
        seen, todo = {0}, [0]
        while todo:
            v = todo.pop()
            for u, w in edges:
                for a, b in ((u, w), (w, u)):
                    if a == v and b not in seen:
                        seen.add(b)
                        todo.append(b)
        if len(seen) == S:
            break
    at = [[] for _ in range(S)]
    for e, (u, w) in enumerate(edges):
        at[u].append(2 * e)
        at[w].append(2 * e + 1)
    for r in at:
        rng.shuffle(r)
    return PolarizedGraph(S, at)


@st.composite
def polarized_graphs(draw, max_S=6, max_extra=6):
    S = draw(st.integers(1, max_S))
    A = draw(st.integers(max(1, S - 1), max(1, S - 1) + max_extra))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_graph(random.Random(seed), S, A)


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    props = dict(report.user_properties)
    label = props.get("criterion", report.nodeid.split("::")[-1])
    status = "PASS" if report.passed else "FAIL"
    _ACCEPTANCE.append((label, status, props.get("detail", "")))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, status, detail in sorted(_ACCEPTANCE, key=lambda t: int(t[0].split()[0])):
        terminalreporter.write_line(f"[{status}] criterion {label}  {detail}".rstrip())

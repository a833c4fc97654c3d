"""Text grammar for partitions, Schubert problems, and osculation types.

problem := cond (";" cond)*
cond    := parts ("^" repeat)?
parts   := int ("," int)*

"1^4" with k=2,n=4 is the problem of four lines; "2,2^4" with k=4,n=8 is the
rectangle-condition problem with six solutions.
"""

from __future__ import annotations

from ..combinat import Partition, SchubertProblem


class ProblemSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at character {position})")
        self.position = position


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        raise ValueError("empty partition text")
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError as e:
        raise ValueError(f"bad partition {text!r}: {e}") from e
    return Partition(tuple(p for p in parts if p != 0))


def parse_problem(text: str, k: int, n: int) -> SchubertProblem:
    """Parse and validate a problem against the box and codimension rules."""
    conditions: list[Partition] = []
    pos = 0
    for chunk in text.split(";"):
        here = pos
        pos += len(chunk) + 1
        body = chunk.strip()
        if not body:
            raise ProblemSyntaxError("empty condition", here)
        if "^" in body:
            parts_text, _, rep_text = body.partition("^")
            try:
                rep = int(rep_text)
            except ValueError:
                raise ProblemSyntaxError(
                    f"bad repetition {rep_text!r}", here + len(parts_text) + 1
                ) from None
            if rep < 1:
                raise ProblemSyntaxError("repetition must be positive", here)
        else:
            parts_text, rep = body, 1
        try:
            lam = parse_partition(parts_text)
        except ValueError as e:
            raise ProblemSyntaxError(str(e), here) from None
        conditions.extend([lam] * rep)
    return SchubertProblem(k, n, tuple(conditions))


def parse_type(text: str, problem: SchubertProblem) -> dict[Partition, int]:
    """Comma-separated rho values, one per distinct partition of the problem
    in order of first appearance."""
    distinct = problem.distinct_conditions()
    values = [v.strip() for v in text.split(",")]
    if len(values) != len(distinct):
        raise ValueError(
            f"type needs {len(distinct)} entries "
            f"(for {'; '.join(map(str, distinct))}), got {len(values)}"
        )
    return {lam: int(v) for lam, v in zip(distinct, values)}


def render_type(rho: dict[Partition, int], problem: SchubertProblem) -> str:
    return ",".join(str(rho[lam]) for lam in problem.distinct_conditions())

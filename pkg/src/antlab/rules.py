"""Rule-strings: parsing, integer codes, cyclic run structure, hot/cold states.

A rule-string is a word over {L, R}; letter k (1-based) is the turn taken on
entering a cell in state k. Its code reads the word in binary with L=1, R=0.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator


class RuleError(ValueError):
    """Raised for malformed rule-strings or misuse of rule-dependent queries."""


@dataclass(frozen=True)
class RuleString:
    letters: str

    def __post_init__(self) -> None:
        if not self.letters:
            raise RuleError("empty rule-string")
        for i, ch in enumerate(self.letters):
            if ch not in "LR":
                raise RuleError(f"illegal character {ch!r} at position {i + 1}")

    @property
    def n(self) -> int:
        return len(self.letters)

    @property
    def code(self) -> int:
        return int(self.letters.translate(_TO_BITS), 2)

    def letter(self, state: int) -> str:
        """Turn letter for a 1-based state."""
        self._check_state(state)
        return self.letters[state - 1]

    def next_state(self, state: int) -> int:
        return 1 if state == self.n else state + 1

    def _check_state(self, state: int) -> None:
        if not 1 <= state <= self.n:
            raise RuleError(f"state {state} outside 1..{self.n}")

    @cached_property
    def runs(self) -> RunStructure:
        return run_structure(self)

    def is_cold(self, state: int) -> bool:
        """True when a cell in ``state`` cannot change its turn letter on the next visit.

        Only defined for rules with the even run-length property, whose cyclic
        runs split the states into same-letter pairs; a cold state is the first
        of its pair. When the pairs are (1,2), (3,4), ... this is "state is
        odd". When they are (2,3), ..., (n,1), as for ant 9 = LRRL, the even
        states are cold instead.
        """
        self._check_state(state)
        if not self.runs.even_run_length:
            raise RuleError(f"hot/cold undefined for {self.letters}: runs are not all even")
        return (state - 1 - self.pair_offset) % 2 == 0

    @property
    def pair_offset(self) -> int:
        """Parity of the first state of any cyclic run (0 when runs start on odd states)."""
        letters = self.letters
        for i in range(1, len(letters)):
            if letters[i] != letters[i - 1]:
                return i % 2
        return 0

    def is_hot(self, state: int) -> bool:
        return not self.is_cold(state)

    @property
    def is_degenerate(self) -> bool:
        """An all-L ant never turns right and circles its first four cells forever."""
        return "R" not in self.letters

    def __str__(self) -> str:
        return self.letters


_TO_BITS = str.maketrans("LR", "10")
_FROM_BITS = str.maketrans("10", "LR")


@dataclass(frozen=True)
class RunStructure:
    cyclic_runs: tuple[tuple[str, int], ...]
    even_run_length: bool


def parse_rule(text: str) -> RuleString:
    """Parse letter text ("LLRR") into a rule."""
    return RuleString(text)


def from_code(code: int) -> RuleString:
    if code < 1:
        raise RuleError(f"rule code must be positive, got {code}")
    return RuleString(format(code, "b").translate(_FROM_BITS))


def rule_from_text(text: str) -> RuleString:
    """Accept either letters ("LLRR") or a decimal code ("12")."""
    text = text.strip()
    if re.fullmatch(r"\d+", text):
        return from_code(int(text))
    return parse_rule(text)


def run_structure(rule: RuleString) -> RunStructure:
    letters = rule.letters
    runs: list[list] = []
    for ch in letters:
        if runs and runs[-1][0] == ch:
            runs[-1][1] += 1
        else:
            runs.append([ch, 1])
    if len(runs) > 1 and runs[0][0] == runs[-1][0]:
        last = runs.pop()
        runs[0][1] += last[1]
    cyclic = tuple((ch, k) for ch, k in runs)
    return RunStructure(cyclic, all(k % 2 == 0 for _, k in cyclic))


def codes_of_length(n: int) -> range:
    """All codes whose rule-strings have n letters and start with L."""
    return range(1 << (n - 1), 1 << n)


def iter_rules(n: int) -> Iterator[RuleString]:
    for code in codes_of_length(n):
        yield from_code(code)


def recurrent_symmetry_candidates(n: int, include_degenerate: bool = False) -> list[int]:
    """Codes of length-n rules with the even run-length property, ascending.

    The all-L rule of even length is a single even cyclic run but never turns
    right; it is left out unless ``include_degenerate`` is set.
    """
    if n < 2:
        raise RuleError("need n >= 2")
    return [
        r.code
        for r in iter_rules(n)
        if r.runs.even_run_length and (include_degenerate or not r.is_degenerate)
    ]

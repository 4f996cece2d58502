"""Global work counters, used by the benchmark and the incrementality tests.

The counters are deliberately coarse.  full_enumerations counts complete
concept enumerations; an edit applied through the incremental engine
must leave it untouched.
"""

from __future__ import annotations

from dataclasses import dataclass, fields


@dataclass
class Counters:
    full_enumerations: int = 0
    concepts_enumerated: int = 0
    closures: int = 0
    subset_tests: int = 0

    def reset(self) -> None:
        for f in fields(self):
            setattr(self, f.name, 0)

    def snapshot(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def delta(self, before: dict[str, int]) -> dict[str, int]:
        return {k: v - before[k] for k, v in self.snapshot().items()}


COUNTERS = Counters()

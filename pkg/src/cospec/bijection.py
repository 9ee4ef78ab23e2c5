"""Explicit vertex maps between small vertex subsets of two graphs."""
from __future__ import annotations

from collections.abc import Iterable, Mapping


class BijectionError(ValueError):
    pass


class Bijection:
    """A finite injective map ``domain -> range`` stored as sorted pairs."""

    __slots__ = ("pairs", "_map")

    def __init__(self, pairs: Iterable[tuple[int, int]] | Mapping[int, int]):
        if isinstance(pairs, Mapping):
            pairs = pairs.items()
        pairs = tuple(sorted((int(a), int(b)) for a, b in pairs))
        mapping = dict(pairs)
        if len(mapping) != len(pairs):
            raise BijectionError(f"repeated source vertex in {pairs}")
        if len(set(mapping.values())) != len(pairs):
            raise BijectionError(f"map is not injective: {pairs}")
        self.pairs = pairs
        self._map = mapping

    @classmethod
    def identity(cls, xs: Iterable[int]) -> Bijection:
        return cls((x, x) for x in xs)

    @classmethod
    def zip(cls, sources: Iterable[int], targets: Iterable[int]) -> Bijection:
        sources, targets = list(sources), list(targets)
        if len(sources) != len(targets):
            raise BijectionError("source and target lengths differ")
        return cls(zip(sources, targets))

    @property
    def domain(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.pairs)

    @property
    def range(self) -> tuple[int, ...]:
        return tuple(sorted(b for _, b in self.pairs))

    def __call__(self, x: int) -> int:
        return self._map[x]

    def __getitem__(self, x: int) -> int:
        return self._map[x]

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __eq__(self, other):
        return isinstance(other, Bijection) and self.pairs == other.pairs

    def __hash__(self):
        return hash(self.pairs)

    def __repr__(self):
        body = ", ".join(f"{a}->{b}" for a, b in self.pairs)
        return f"Bijection({body})"

    def inverse(self) -> Bijection:
        return Bijection((b, a) for a, b in self.pairs)

    def then(self, other: Bijection) -> Bijection:
        """Composition ``other o self`` (apply ``self`` first)."""
        return Bijection((a, other[b]) for a, b in self.pairs)

    def extend(self, a: int, b: int) -> Bijection:
        return Bijection(self.pairs + ((a, b),))

    def check(self, source: Iterable[int], target: Iterable[int]) -> None:
        """Raise unless this is a bijection from ``source`` onto ``target``."""
        if set(self.domain) != set(source) or set(self.range) != set(target):
            raise BijectionError(
                f"{self!r} is not a bijection {sorted(set(source))} -> {sorted(set(target))}"
            )

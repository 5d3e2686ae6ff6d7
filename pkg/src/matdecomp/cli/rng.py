"""A 64-bit linear congruential generator with a fixed, documented recurrence.

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2^64

Each draw returns the top 32 bits of the new state. Integers in [0, n)
are drawn by rejection so that every value is equally likely. Seeding
sets state = seed mod 2^64 and discards one draw. The point of writing
this out is that suites reproduce across implementations.
"""
from __future__ import annotations

__all__ = ["Lcg"]

_A = 6364136223846793005
_C = 1442695040888963407
_MASK = (1 << 64) - 1


class Lcg:
    def __init__(self, seed: int = 0):
        self.state = seed & _MASK
        self.next_u32()

    def next_u32(self) -> int:
        self.state = (_A * self.state + _C) & _MASK
        return self.state >> 32

    def randrange(self, n: int) -> int:
        if n <= 0:
            raise ValueError("empty range")
        limit = (1 << 32) - (1 << 32) % n
        while True:
            x = self.next_u32()
            if x < limit:
                return x % n

    def randint(self, a: int, b: int) -> int:
        return a + self.randrange(b - a + 1)

    def random(self) -> float:
        return self.next_u32() / (1 << 32)

    def chance(self, num: int, den: int) -> bool:
        return self.randrange(den) < num

    def choice(self, seq):
        return seq[self.randrange(len(seq))]

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample(self, seq, k: int) -> list:
        items = list(seq)
        self.shuffle(items)
        return items[:k]

    def subset(self, seq, num: int = 1, den: int = 2) -> list:
        return [x for x in seq if self.chance(num, den)]

    def fork(self, tag: int) -> "Lcg":
        """An independent stream derived from the current state and a tag."""
        return Lcg(self.next_u32() * 0x9E3779B1 + tag)

import logging
from pathlib import Path
from typing import List, Optional, Sequence, Union

from core.errors import BitSourceExhaustedError, PreconditionError

logger = logging.getLogger(__name__)

_MASK64 = (1 << 64) - 1


class BitSource:
    """
    Deterministic bit stream with a cursor of consumed bits.

    Seeded streams come from a 64-bit xorshift generator (13, 7, 17 shifts),
    one output bit per step; this stands in for a random sequence and carries
    no randomness guarantee. Finite streams (explicit lists, files) raise
    BitSourceExhaustedError when read past their end.
    """

    def __init__(self, seed: Optional[int] = None, bits: Optional[Sequence[int]] = None,
                 constant: Optional[int] = None, descriptor: Optional[str] = None):
        if sum(x is not None for x in (seed, bits, constant)) != 1:
            raise PreconditionError("give exactly one of seed, bits or constant", module="constructions")
        self.seed = seed
        self.cursor = 0
        self._bits = list(bits) if bits is not None else None
        self._constant = constant
        if seed is not None:
            self._state = (seed & _MASK64) or 0x9E3779B97F4A7C15
            self.descriptor = descriptor or f"xorshift64(seed={seed})"
        elif bits is not None:
            if any(b not in (0, 1) for b in self._bits):
                raise PreconditionError("bit lists hold 0/1 only", module="constructions")
            self.descriptor = descriptor or f"bits[{len(self._bits)}]"
        else:
            if constant not in (0, 1):
                raise PreconditionError("constant stream must be 0 or 1", module="constructions")
            self.descriptor = descriptor or f"constant({constant})"

    @classmethod
    def from_seed(cls, seed: int) -> "BitSource":
        return cls(seed=seed)

    @classmethod
    def from_bits(cls, bits: Union[str, Sequence[int]]) -> "BitSource":
        if isinstance(bits, str):
            if set(bits) - {"0", "1"}:
                raise PreconditionError("bit strings hold 0/1 only", module="constructions")
            bits = [int(c) for c in bits]
        return cls(bits=bits)

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "BitSource":
        """ASCII 0/1 file; whitespace is ignored."""
        text = "".join(Path(path).read_text().split())
        source = cls.from_bits(text)
        source.descriptor = f"file({path})"
        return source

    @classmethod
    def constant(cls, bit: int) -> "BitSource":
        return cls(constant=bit)

    @property
    def finite(self) -> bool:
        return self._bits is not None

    def _step(self) -> int:
        x = self._state
        x ^= (x << 13) & _MASK64
        x ^= x >> 7
        x ^= (x << 17) & _MASK64
        self._state = x
        return x & 1

    def next_bit(self) -> int:
        if self._bits is not None:
            if self.cursor >= len(self._bits):
                raise BitSourceExhaustedError(
                    f"bit source exhausted after {self.cursor} bits", module="constructions"
                )
            bit = self._bits[self.cursor]
        elif self._constant is not None:
            bit = self._constant
        else:
            bit = self._step()
        self.cursor += 1
        return bit

    def take(self, n: int) -> List[int]:
        if self._bits is not None and self.cursor + n > len(self._bits):
            raise BitSourceExhaustedError(
                f"need {n} bits at cursor {self.cursor}, only {len(self._bits) - self.cursor} left",
                module="constructions",
            )
        return [self.next_bit() for _ in range(n)]

    def take_string(self, n: int) -> str:
        return "".join(str(b) for b in self.take(n))

"""
LZ78 code length: the computable stand-in for prefix complexity.

A string is parsed into phrases, each the longest previously seen phrase plus
one new bit. Phrase k is sent as a pointer into the k-entry dictionary
(ceil(log2 k) bits) followed by the new bit. A trailing phrase that already
exists costs its pointer only. The coder falls back to a stored copy of the
input when that is shorter, with one flag bit selecting the mode.
"""

from typing import List, Tuple


class ProxyCoder:
    """Deterministic, total code-length function over bit strings."""

    name = "lz78"

    def phrases(self, w: str) -> Tuple[List[Tuple[int, str]], bool]:
        """(parent index, new bit) per phrase and whether a trailing pointer-only phrase remains."""
        trie = {}
        out = []
        node = 0
        for bit in w:
            child = trie.get((node, bit))
            if child is None:
                out.append((node, bit))
                trie[(node, bit)] = len(out)
                node = 0
            else:
                node = child
        return out, node != 0

    def lz78_length(self, w: str) -> int:
        parsed, tail = self.phrases(w)
        cost = sum(_pointer_bits(k) + 1 for k in range(1, len(parsed) + 1))
        if tail:
            cost += _pointer_bits(len(parsed) + 1)
        return cost

    def encode_length(self, w: str) -> int:
        if not w:
            return 0
        return 1 + min(self.lz78_length(w), len(w))


def _pointer_bits(k: int) -> int:
    # the k-th phrase points into a dictionary of k entries (the empty phrase included)
    return (k - 1).bit_length()


_default = ProxyCoder()


def lz_complexity(w: str, coder: ProxyCoder = _default) -> int:
    """Code length of bit string w in bits; 0 for the empty string."""
    return coder.encode_length(w)

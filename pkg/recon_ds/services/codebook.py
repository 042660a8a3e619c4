"""Cached code enumeration and read lookup."""

import logging
from collections import OrderedDict
from typing import Dict, FrozenSet, List, Optional, Tuple

from ..core import bits
from ..core.codefamilies import enumerate_bits
from ..core.config import get_config
from ..models.code import CodeSpec
from ..models.sequence import BinSeq

logger = logging.getLogger(__name__)


class Codebook:
    """
    Keeps the members of recently used code specs, plus an index from each
    ball element to the codewords whose ball contains it.

    At most `capacity` specs are held (channel.codebook_specs when None);
    the least recently used one is dropped first.
    """

    def __init__(self, max_n: Optional[int] = None, capacity: Optional[int] = None):
        self.max_n = max_n
        self.capacity = capacity
        self._words: "OrderedDict[CodeSpec, Tuple[str, ...]]" = OrderedDict()
        self._index: Dict[CodeSpec, Dict[str, Tuple[str, ...]]] = {}

    def _limit(self) -> int:
        limit = self.capacity if self.capacity is not None else get_config().channel.codebook_specs
        return max(1, limit)

    def words(self, spec: CodeSpec) -> Tuple[str, ...]:
        if spec in self._words:
            self._words.move_to_end(spec)
            return self._words[spec]
        self._words[spec] = tuple(enumerate_bits(spec, self.max_n))
        logger.debug(f"Enumerated {len(self._words[spec])} codewords for {spec.family.value} n={spec.n}")
        while len(self._words) > self._limit():
            dropped, _ = self._words.popitem(last=False)
            self._index.pop(dropped, None)
            logger.debug(f"Dropped cached code {dropped.family.value} n={dropped.n}")
        return self._words[spec]

    def members(self, spec: CodeSpec) -> List[BinSeq]:
        return [BinSeq.trusted(w) for w in self.words(spec)]

    def read_index(self, spec: CodeSpec) -> Dict[str, Tuple[str, ...]]:
        words = self.words(spec)
        if spec not in self._index:
            index: Dict[str, List[str]] = {}
            for w in words:
                for z in bits.ds_ball(w):
                    index.setdefault(z, []).append(w)
            self._index[spec] = {z: tuple(ws) for z, ws in index.items()}
        return self._index[spec]

    def holders(self, spec: CodeSpec, read: str) -> FrozenSet[str]:
        """Codewords whose ball contains read."""
        return frozenset(self.read_index(spec).get(read, ()))

    def clear(self) -> None:
        self._words.clear()
        self._index.clear()

    def __contains__(self, spec: CodeSpec) -> bool:
        return spec in self._words

    def __len__(self) -> int:
        return len(self._words)

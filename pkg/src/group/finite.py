"""Groups acting by signed cell permutations.

A group element is stored as its cochain-level action: for every degree, a
tuple indexed by source cell of (target cell, sign). Finite groups are
synthesised as the closure of the generator elements, so the element list,
multiplication table and inverses come straight from the action data.
"""

import re
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from src.errors import ActionValidationError, GroupError
from src.utils.logging import get_logger

logger = get_logger(__name__)

# element[p][i] = (j, sign): indicator of p-cell i goes to sign * indicator of p-cell j
SignedMap = Tuple[Tuple[int, int], ...]
Element = Tuple[SignedMap, ...]

MAX_GROUP_ORDER = 5000

_FACTOR = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


def identity_element(counts: Sequence[int]) -> Element:
    return tuple(tuple((i, 1) for i in range(n)) for n in counts)


def compose(a: Element, b: Element) -> Element:
    """a∘b: apply b first, then a."""
    return tuple(
        tuple((a[p][t][0], a[p][t][1] * s) for t, s in level)
        for p, level in enumerate(b)
    )


def invert(a: Element) -> Element:
    result = []
    for level in a:
        inverse: List[Tuple[int, int]] = [(0, 0)] * len(level)
        for i, (t, s) in enumerate(level):
            inverse[t] = (i, s)
        result.append(tuple(inverse))
    return tuple(result)


def check_signed_permutation(element: Element, counts: Sequence[int], name: str):
    if len(element) != len(counts):
        raise ActionValidationError(
            f"generator '{name}' gives {len(element)} degrees, complex has {len(counts)}"
        )
    for p, (level, n) in enumerate(zip(element, counts)):
        if len(level) != n:
            raise ActionValidationError(
                f"generator '{name}' maps {len(level)} cells in degree {p}, complex has {n}",
                degree=p,
            )
        targets = [t for t, _ in level]
        if sorted(targets) != list(range(n)):
            raise ActionValidationError(
                f"generator '{name}' is not a permutation of degree-{p} cells", degree=p
            )
        bad = [s for _, s in level if s not in (1, -1)]
        if bad:
            raise ActionValidationError(
                f"generator '{name}' has sign {bad[0]} in degree {p} (signs are ±1)", degree=p
            )


def parse_word(word: str) -> List[Tuple[str, int]]:
    """'a*b^-1*a^2' -> [('a', 1), ('b', -1), ('a', 2)]; 'e' or '1' is empty."""
    word = word.strip()
    if word in ("", "e", "1"):
        return []
    factors = []
    for token in re.split(r"[*\s]+", word):
        if not token:
            continue
        match = _FACTOR.match(token)
        if not match:
            raise GroupError(f"cannot parse group word factor '{token}'")
        factors.append((match.group(1), int(match.group(2) or 1)))
    return factors


@dataclass(frozen=True)
class FreeAbelianGroup:
    """ℤⁿ deck group; elements are integer translation vectors."""

    rank: int

    @property
    def generator_names(self) -> Tuple[str, ...]:
        return tuple(f"t{k + 1}" for k in range(self.rank))

    @property
    def finite(self) -> bool:
        return False

    def unit(self, k: int) -> Tuple[int, ...]:
        return tuple(1 if a == k else 0 for a in range(self.rank))

    def to_dict(self) -> Dict[str, object]:
        return {"kind": "free-abelian", "rank": self.rank}


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """Finite group given by its elements as signed cell permutations."""

    generator_names: Tuple[str, ...]
    generators: Tuple[int, ...]
    elements: Tuple[Element, ...]
    words: Tuple[str, ...]
    table: Tuple[Tuple[int, ...], ...]
    inverses: Tuple[int, ...]

    @property
    def finite(self) -> bool:
        return True

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> int:
        return 0

    @classmethod
    def from_generators(cls, names: Sequence[str], maps: Sequence[Element], counts: Sequence[int],
                        order: Optional[int] = None, relations: Sequence[str] = ()) -> "FiniteGroup":
        """Close the generator maps under composition (breadth first)."""
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ActionValidationError(f"duplicate generator names in {names}")
        identity = identity_element(counts)
        elements: List[Element] = [identity]
        words: List[str] = ["e"]
        position: Dict[Element, int] = {identity: 0}
        queue = deque([0])
        while queue:
            k = queue.popleft()
            for name, g in zip(names, maps):
                product = compose(elements[k], g)
                if product in position:
                    continue
                if len(elements) >= MAX_GROUP_ORDER:
                    raise GroupError(f"generated group exceeds {MAX_GROUP_ORDER} elements")
                position[product] = len(elements)
                elements.append(product)
                words.append(name if words[k] == "e" else f"{words[k]}*{name}")
                queue.append(position[product])

        table = tuple(
            tuple(position[compose(a, b)] for b in elements)
            for a in elements
        )
        inverses = tuple(position[invert(a)] for a in elements)
        group = cls(
            generator_names=names,
            generators=tuple(position[g] for g in maps),
            elements=tuple(elements),
            words=tuple(words),
            table=table,
            inverses=inverses,
        )

        if order is not None and group.order != order:
            raise ActionValidationError(
                f"generators produce a group of order {group.order}, declared order is {order}",
                relation=f"order={order}",
            )
        for relation in relations:
            group.check_relation(relation)
        logger.debug(f"Synthesised group of order {group.order} from generators {names}")
        return group

    def multiply(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.inverses[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse(a), -k
        result = self.identity
        for _ in range(k):
            result = self.multiply(result, a)
        return result

    def evaluate(self, word: str) -> int:
        result = self.identity
        for name, exponent in parse_word(word):
            if name not in self.generator_names:
                raise GroupError(f"unknown generator '{name}' in word '{word}'")
            g = self.generators[self.generator_names.index(name)]
            result = self.multiply(result, self.power(g, exponent))
        return result

    def check_relation(self, relation: str):
        """A relation is 'word' (equal to e) or 'lhs = rhs'."""
        lhs, _, rhs = relation.partition("=")
        try:
            holds = self.evaluate(lhs) == self.evaluate(rhs or "e")
        except GroupError as e:
            raise ActionValidationError(str(e), relation=relation) from e
        if not holds:
            raise ActionValidationError(f"relation '{relation}' does not hold", relation=relation)

    def element_index(self, ref: Union[int, str]) -> int:
        """Element by index, generator name or word."""
        if isinstance(ref, bool):
            raise GroupError(f"unknown group element {ref!r}")
        if isinstance(ref, int):
            if not 0 <= ref < self.order:
                raise GroupError(f"group element {ref} out of range (order {self.order})")
            return ref
        if isinstance(ref, str):
            return self.evaluate(ref)
        raise GroupError(f"unknown group element {ref!r}")

    def to_dict(self) -> Dict[str, object]:
        return {
            "kind": "finite",
            "order": self.order,
            "generators": list(self.generator_names),
        }


Group = Union[FiniteGroup, FreeAbelianGroup]

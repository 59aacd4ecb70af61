from typing import Dict, Tuple

# Z2 x Z3 -> Z6, the Chinese remainder pairing x <-> (x mod 2, x mod 3)
Z2Z3_TO_Z6: Dict[Tuple[int, int], int] = {
    (0, 0): 0,
    (1, 1): 1,
    (0, 2): 2,
    (1, 0): 3,
    (0, 1): 4,
    (1, 2): 5,
}

Z6_TO_Z2Z3: Dict[int, Tuple[int, int]] = {z: pair for pair, z in Z2Z3_TO_Z6.items()}


def z2z3_to_z6(a: int, b: int) -> int:
    return Z2Z3_TO_Z6[(a % 2, b % 3)]


def z6_to_z2z3(x: int) -> Tuple[int, int]:
    return Z6_TO_Z2Z3[x % 6]

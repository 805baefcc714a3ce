"""Integer arithmetic: primes, Moebius, odd squarefree enumeration and the Kronecker symbol."""
from src.arith.sieve import (
    primes_upto,
    prime_blocks,
    odd_prime_bits,
    mobius,
    mobius_table,
    sieve_squarefree_odd,
    odd_squarefree_magnitudes,
    chebyshev_theta,
)
from src.arith.kronecker import kronecker, jacobi_table, character_table

__all__ = [
    "primes_upto",
    "prime_blocks",
    "odd_prime_bits",
    "mobius",
    "mobius_table",
    "sieve_squarefree_odd",
    "odd_squarefree_magnitudes",
    "chebyshev_theta",
    "kronecker",
    "jacobi_table",
    "character_table",
]

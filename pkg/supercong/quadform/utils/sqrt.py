from seqlib.services import legendre


def prime_mod_sqrt(a: int, p: int) -> list[int]:
    """
    Square root modulo an odd prime.

    Solves x^2 = a mod p by Tonelli-Shanks and returns the list of
    solutions (empty when a is a non-residue).
    """
    a %= p
    if a == 0:
        return [0]
    if p == 2:
        return [a]
    if legendre(a, p) != 1:
        return []

    # Simple case
    if p % 4 == 3:
        x = pow(a, (p + 1) // 4, p)
        return sorted([x, p - x])

    # Factor p-1 on the form q * 2^s (with q odd)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1

    # First quadratic non-residue
    z = 2
    while legendre(z, p) != -1:
        z += 1

    m = s
    c = pow(z, q, p)
    t = pow(a, q, p)
    x = pow(a, (q + 1) // 2, p)
    while t != 1:
        # least i with t^(2^i) = 1
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m = i
        c = b * b % p
        t = t * c % p
        x = x * b % p
    return sorted([x, p - x])

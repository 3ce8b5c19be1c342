"""Tate period by the fixed point q = S(q)/j_E with S(q) = q j(q), and
v_p(log_p q).  Arithmetic is done with integers mod p^N.

usage: tate_period.py NUM DEN p N   (j_E = NUM/DEN, ord_p j_E < 0)
"""
import sys


def sigma3(n):
    return sum(d ** 3 for d in range(1, n + 1) if n % d == 0)


def mul(a, b, M):
    out = [0] * M
    for i, x in enumerate(a[:M]):
        if x:
            for j, y in enumerate(b[: M - i]):
                out[i + j] += x * y
    return out


def qj_series(M):
    e4 = [1] + [240 * sigma3(n) for n in range(1, M)]
    cube = mul(mul(e4, e4, M), e4, M)
    inv = [1] + [0] * (M - 1)
    for n in range(1, M):
        for _ in range(24):
            for i in range(n, M):
                inv[i] += inv[i - n]
    return mul(cube, inv, M)


def vp(a, p):
    if a == 0:
        return 10 ** 9
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


def tate(num, den, p, N):
    vj = vp(num, p) - vp(den, p)
    assert vj < 0
    mod = p ** N
    nu, de = num // p ** vp(num, p), den // p ** vp(den, p)
    jinv = p ** (-vj) * de * pow(nu, -1, mod) % mod
    M = N // (-vj) + 3
    S = qj_series(M)
    q = jinv
    for _ in range(N + 2):
        s, qk = 0, 1
        for c in S:
            s = (s + c * qk) % mod
            qk = qk * q % mod
        q = s * jinv % mod
    return q


def log_valuation(q, p, N):
    mod = p ** N
    v = vp(q, p)
    u = q // p ** v
    m = p - 1 if p > 2 else 2
    t = (pow(u, m, mod) - 1) % mod
    s = 0
    tk = 1
    for k in range(1, 4 * N):
        tk = tk * t
        e = vp(k, p)
        term = (tk // p ** e) * pow(k // p ** e, -1, mod)
        s = (s + (term if k % 2 else -term)) % mod
    return vp(s, p) - vp(m, p)


if __name__ == "__main__":
    num, den, p, N = map(int, sys.argv[1:5])
    q = tate(num, den, p, N)
    print(vp(q, p), log_valuation(q, p, N), q)

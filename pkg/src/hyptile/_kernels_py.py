"""Pure-Python kernels for the hot inner loops.

Same contracts as the compiled module ``hyptile._kernels``; this version
runs on arbitrary-precision Python ints and is the exactness fallback
whenever the compiled kernel is missing or its int64 guard trips.

All three kernels work on denominator-cleared integers:

* ``canonicalize_scaled`` - the representative-reduction loop of the
  tiling, on a vector scaled so that coordinates and both side lengths
  are integers.
* ``fill_torus_cells`` - dense exact-cover fill of a discrete torus.
* ``facet_events`` - same-kind adjacency events between torus tiles.
"""

from __future__ import annotations


def canonicalize_scaled(y, big, small):
    """Reduce integer vector y into the fundamental domain.

    ``big`` and ``small`` are the scaled side lengths Q > P > 0.  Returns
    (rep, k, iterations): rep is the reduced vector, k the integer basis
    coordinates with y == rep + A_scaled @ k, iterations the number of
    passes taken by the middle reduction loop.
    """
    q = big
    p = small
    n = len(y)
    y = list(y)
    k = [0] * n

    # phase 1: fold coordinates 0..n-2 into [0, q) using basis columns,
    # each subtraction of t*a_i moves t*p into the next coordinate
    for i in range(n - 1):
        t = y[i] // q
        if t:
            y[i] -= t * q
            y[i + 1] += t * p
            k[i] += t

    # phase 2/3: walk the last coordinate into [0, p+q) with the
    # reduction columns; each pass moves it by at least q
    pq = p + q
    qp = q - p
    last = n - 1
    iterations = 0
    while True:
        yn = y[last]
        if yn >= pq:
            l = last
            for i in range(last):
                if y[i] >= p:
                    l = i
                    break
            for i in range(l):
                y[i] += qp
                k[i] -= 1
            if l == last:
                y[last] -= pq
            else:
                y[l] -= p
                y[last] -= q
            k[last] += 1
            iterations += 1
        elif yn < 0:
            l = last
            for i in range(last):
                if y[i] < qp:
                    l = i
                    break
            for i in range(l):
                y[i] -= qp
                k[i] += 1
            if l == last:
                y[last] += pq
            else:
                y[l] += p
                y[last] += q
            k[last] -= 1
            iterations += 1
        else:
            break

    # final step: if the last coordinate sits in [q, p+q) but some earlier
    # coordinate is >= p, one more reduction lands in the big box
    if y[last] >= q:
        l = -1
        for i in range(last):
            if y[i] >= p:
                l = i
                break
        if l >= 0:
            for i in range(l):
                y[i] += qp
                k[i] -= 1
            y[l] -= p
            y[last] -= q
            k[last] += 1

    return y, k, iterations


def fill_torus_cells(assign, residues, big_offsets, small_offsets, n, m):
    """Assign every torus cell to its owning tile.

    ``assign`` is a mutable flat buffer of length m**n initialized to -1,
    indexed by sum(c_j * m**j).  ``residues`` is a flat buffer of
    residue coordinates (count * n ints); offset buffers are flat in the
    same layout.  Tile owner ids are 2*residue_index for the big cube and
    2*residue_index + 1 for the small cube.

    Returns -1 on success, or the flat index of the first doubly
    assigned cell.
    """
    strides = [m**j for j in range(n)]
    count = len(residues) // n
    for ri in range(count):
        base = ri * n
        for owner_bit, offsets in ((0, big_offsets), (1, small_offsets)):
            owner = 2 * ri + owner_bit
            ncells = len(offsets) // n
            for oi in range(ncells):
                idx = 0
                off = oi * n
                for j in range(n):
                    c = residues[base + j] + offsets[off + j]
                    if c >= m:
                        c -= m
                    idx += c * strides[j]
                if assign[idx] != -1:
                    return idx
                assign[idx] = owner
    return -1


def facet_events(assign, n, m):
    """Same-kind adjacency events across unit faces of the torus.

    For every cell and every +axis neighbor with a different owner of the
    same kind (owner ids share parity), emits one packed event
    ``(a * total + b) * 64 + axis`` where ``total == m**n``.  Counting
    events per key upstream detects full shared facets.
    """
    total = m**n
    events = []
    for axis in range(n):
        stride = m**axis
        block = stride * m
        wrap = block - stride
        for idx in range(total):
            a = assign[idx]
            if (idx % block) < wrap:
                nb = idx + stride
            else:
                nb = idx - wrap
            b = assign[nb]
            if a != b and ((a ^ b) & 1) == 0:
                events.append((a * total + b) * 64 + axis)
    return events

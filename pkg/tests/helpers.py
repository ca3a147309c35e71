import random

from graphtimeline.timeline import Timeline


def alternating_cycle_timeline(seed: int, n: int, t: int) -> Timeline:
    """A permanent path whose stretches stay on a cycle in every version.

    Pairs of closing edges are toggled so that at least one of each pair is
    always present; the covered stretches never split into separate 2-edge-
    connected components even though no single closing edge lives throughout.
    """
    rng = random.Random(seed)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    chain = [(order[i], order[i + 1]) for i in range(n - 1)]
    pairs = []
    for _ in range(max(1, n // 6)):
        i = rng.randrange(0, n - 3)
        j = rng.randrange(i + 3, n)
        a, b = order[i], order[j]
        c = order[j - 1] if rng.random() < 0.5 else order[rng.randrange(i + 2, j)]
        e1, e2 = tuple(sorted((a, b))), tuple(sorted((a, c)))
        if e1 != e2 and e1 not in chain and e2 not in chain and not any(e in p for p in pairs for e in (e1, e2)):
            pairs.append((e1, e2))
    live = {p[0] for p in pairs}
    updates = []
    while len(updates) < t - 1:
        e1, e2 = rng.choice(pairs)
        if e1 in live and e2 in live:
            gone = e1 if rng.random() < 0.5 else e2
            live.discard(gone)
            updates.append(("-", *gone))
        else:
            missing = e2 if e1 in live else e1
            live.add(missing)
            updates.append(("+", *missing))
    return Timeline.build(n, set(chain) | {p[0] for p in pairs}, updates)

"""Plain-text layouts: arrow table and product table side by side."""


def _block(sym, labels, table):
    width = max(len(s) for s in list(labels) + [sym])
    lines = [sym.ljust(width) + " | " + " ".join(s.ljust(width) for s in labels)]
    lines.append("-" * len(lines[0]))
    for i, s in enumerate(labels):
        lines.append(s.ljust(width) + " | " + " ".join(labels[v].ljust(width) for v in table[i]))
    return lines


def render_tables(L, labels=None):
    """Byte-deterministic text: the -> table, then the product table to its right."""
    labels = list(labels or L.labels)
    left = _block("->", labels, L.arrow)
    right = _block("(x)", labels, L.odot)
    pad = max(len(s) for s in left)
    rows = [(a.ljust(pad) + "    " + b).rstrip() for a, b in zip(left, right)]
    return "\n".join(rows) + "\n"

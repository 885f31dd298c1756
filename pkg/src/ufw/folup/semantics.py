"""Finite structures and Tarskian evaluation.

A structure interprets every symbol by a total table.  Equality is an
interpreted relation: it must be an equivalence that is a congruence for
every symbol (checked on load), but it need not be literal identity —
such "non-normal" structures arise naturally as ultraproducts and are
collapsed by :func:`normalize`.

Evaluation desugars ∨, →, ↔ and ∀ into the ¬/∧/∃ core, so a single
induction covers the whole grammar.
"""

from itertools import product as iproduct


class Structure:
    """universe: size n (elements 0..n-1); funcs: name → nested tuple table;
    rels: name → frozenset of argument tuples; consts: name → element."""

    __slots__ = ("sig", "size", "funcs", "rels", "consts")

    def __init__(self, sig, size, funcs=None, rels=None, consts=None, validate=True):
        funcs = dict(funcs or {})
        rels = {name: frozenset(map(tuple, tups)) for name, tups in dict(rels or {}).items()}
        consts = dict(consts or {})
        if size < 1:
            raise ValueError("universe must be non-empty")
        if "=" not in rels:
            rels["="] = frozenset((i, i) for i in range(size))
        for name, arity in sig.functions:
            if name not in funcs:
                raise ValueError("missing function table %r" % name)
            funcs[name] = _freeze_table(funcs[name], arity, size, name)
        for name, arity in sig.relations:
            if name not in rels:
                raise ValueError("missing relation table %r" % name)
            for tup in rels[name]:
                if len(tup) != arity or any(not 0 <= v < size for v in tup):
                    raise ValueError("relation %r contains invalid tuple %r" % (name, tup))
        for name in sig.constants:
            if name not in consts or not 0 <= consts[name] < size:
                raise ValueError("missing or invalid constant %r" % name)
        object.__setattr__(self, "sig", sig)
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "funcs", funcs)
        object.__setattr__(self, "rels", rels)
        object.__setattr__(self, "consts", consts)
        if validate:
            witness = equality_axiom_witness(self)
            if witness is not None:
                raise ValueError("equality axioms violated: %s" % (witness,))

    def __setattr__(self, name, value):
        raise AttributeError("Structure is immutable")

    def apply(self, fname, args):
        table = self.funcs[fname]
        for a in args:
            table = table[a]
        return table

    def holds(self, rname, args):
        return tuple(args) in self.rels[rname]

    def equal(self, a, b):
        return (a, b) in self.rels["="]

    def to_json(self):
        return {
            "universe": self.size,
            "functions": {n: _table_to_json(self.funcs[n]) for n, _ in self.sig.functions},
            "relations": {n: sorted(map(list, self.rels[n])) for n, _ in self.sig.relations},
            "constants": dict(self.consts),
        }

    @classmethod
    def from_json(cls, sig, obj):
        rels = {n: [tuple(t) for t in tups] for n, tups in obj.get("relations", {}).items()}
        return cls(
            sig,
            obj["universe"],
            funcs=obj.get("functions", {}),
            rels=rels,
            consts=obj.get("constants", {}),
        )


def _freeze_table(table, arity, size, name):
    if arity == 0:
        if not 0 <= table < size:
            raise ValueError("nullary function %r out of range" % name)
        return table
    table = tuple(table)
    if len(table) != size:
        raise ValueError("function table %r has wrong shape" % name)
    return tuple(_freeze_table(row, arity - 1, size, name) for row in table)


def _table_to_json(table):
    if isinstance(table, int):
        return table
    return [_table_to_json(row) for row in table]


def equality_axiom_witness(s):
    """None if "=" is an equivalence and a congruence for every symbol;
    otherwise a human-readable witness tuple."""
    n = s.size
    eq = s.rels["="]
    for a in range(n):
        if (a, a) not in eq:
            return ("not-reflexive", a)
    for a, b in eq:
        if (b, a) not in eq:
            return ("not-symmetric", a, b)
    for a, b in eq:
        for c in range(n):
            if (b, c) in eq and (a, c) not in eq:
                return ("not-transitive", a, b, c)
    for name, arity in s.sig.functions:
        for args1 in iproduct(range(n), repeat=arity):
            for args2 in iproduct(range(n), repeat=arity):
                if all((u, v) in eq for u, v in zip(args1, args2)):
                    if (s.apply(name, args1), s.apply(name, args2)) not in eq:
                        return ("function-congruence", name, args1, args2)
    for name, arity in s.sig.relations:
        if name == "=":
            continue
        for args1 in iproduct(range(n), repeat=arity):
            for args2 in iproduct(range(n), repeat=arity):
                if all((u, v) in eq for u, v in zip(args1, args2)):
                    if s.holds(name, args1) != s.holds(name, args2):
                        return ("relation-congruence", name, args1, args2)
    # "=" itself must be a congruence for "=": guaranteed by
    # symmetry+transitivity, no separate scan needed.
    return None


def eval_term(s, t, env):
    tag = t[0]
    if tag == "var":
        return env[t[1]]
    if tag == "const":
        return s.consts[t[1]]
    return s.apply(t[1], [eval_term(s, a, env) for a in t[2]])


def eval_formula(s, phi, env=None):
    """Tarskian truth over the finite universe (quantifiers range over all
    elements; equality atoms use the structure's "=" table)."""
    env = dict(env or {})
    return _eval(s, phi, env)


def _eval(s, phi, env):
    tag = phi[0]
    if tag == "atom":
        args = [eval_term(s, t, env) for t in phi[2]]
        return s.holds(phi[1], args)
    if tag == "not":
        return not _eval(s, phi[1], env)
    if tag == "and":
        return _eval(s, phi[1], env) and _eval(s, phi[2], env)
    if tag == "or":  # desugared: ¬(¬f ∧ ¬g)
        return _eval(s, ("not", ("and", ("not", phi[1]), ("not", phi[2]))), env)
    if tag == "imp":
        return _eval(s, ("or", ("not", phi[1]), phi[2]), env)
    if tag == "iff":
        return _eval(s, ("and", ("imp", phi[1], phi[2]), ("imp", phi[2], phi[1])), env)
    if tag == "exists":
        var, body = phi[1], phi[2]
        saved = env.get(var, _MISSING)
        for v in range(s.size):
            env[var] = v
            if _eval(s, body, env):
                _restore(env, var, saved)
                return True
        _restore(env, var, saved)
        return False
    if tag == "forall":  # desugared: ¬∃¬
        return _eval(s, ("not", ("exists", phi[1], ("not", phi[2]))), env)
    raise ValueError("unknown formula tag %r" % tag)


_MISSING = object()


def _restore(env, var, saved):
    if saved is _MISSING:
        env.pop(var, None)
    else:
        env[var] = saved


def normalize(s):
    """Quotient a structure by its equality relation.

    The result's universe is the set of equivalence classes (indexed by
    ascending least representative) and its equality is literal identity.
    Congruence (validated on construction) makes every interpretation
    well-defined on classes.
    """
    n = s.size
    rep = list(range(n))
    for a in range(n):
        for b in range(a):
            if s.equal(a, b):
                rep[a] = rep[b]
                break
    reps = sorted(set(rep))
    cls = {r: i for i, r in enumerate(reps)}
    of = [cls[rep[a]] for a in range(n)]

    def build(fname, arity):
        def rec(prefix):
            if len(prefix) == arity:
                return of[s.apply(fname, [reps[i] for i in prefix])]
            return tuple(rec(prefix + (i,)) for i in range(len(reps)))

        return rec(())

    funcs = {name: build(name, arity) for name, arity in s.sig.functions}
    rels = {}
    for name, arity in s.sig.relations:
        if name == "=":
            continue
        rels[name] = frozenset(
            args
            for args in iproduct(range(len(reps)), repeat=arity)
            if s.holds(name, [reps[i] for i in args])
        )
    consts = {name: of[v] for name, v in s.consts.items()}
    return Structure(s.sig, len(reps), funcs=funcs, rels=rels, consts=consts)

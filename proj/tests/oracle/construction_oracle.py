"""Independent reference for the term -> construction mapping.

Terms are nested tuples:
  ("var", name, ty) ("const", name, ty) ("comb", f, x) ("abs", v, b) ("quote", b)
Types: "'A" for variables, "num" etc. for base types, ("fun", a, b).
Prints constructions in the compact display syntax (application by
juxtaposition, compound arguments in parentheses).
"""


def lit(s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def app(head, *args):
    parts = [head]
    for a in args:
        parts.append(a if " " not in a or a.startswith('"') and a.count('"') == 2 and " " not in a else "(" + a + ")")
    return " ".join(parts)


def ty(t):
    if isinstance(t, str):
        if t.startswith("'"):
            return app("TyVar", lit(t[1:]))
        return app("TyBase", lit(t))
    name, *args = t
    if len(args) == 1:
        return app("TyMonoCons", lit(name), ty(args[0]))
    if len(args) == 2:
        return app("TyBiCons", lit(name), ty(args[0]), ty(args[1]))
    raise ValueError("arity")


def E(t):
    k = t[0]
    if k == "var":
        return app("QuoVar", lit(t[1]), ty(t[2]))
    if k == "const":
        return app("QuoConst", lit(t[1]), ty(t[2]))
    if k == "comb":
        return app("App", E(t[1]), E(t[2]))
    if k == "abs":
        return app("Abs", E(t[1]), E(t[2]))
    if k == "quote":
        return app("Quo", E(t[1]))
    raise ValueError(k)


NB = ("fun", "num", "bool")
CASES = {
    "var_x_num": ("var", "x", "num"),
    "const_T": ("const", "T", "bool"),
    "tyvar": ("var", "a", "'A"),
    "comb": ("comb", ("var", "f", NB), ("var", "x", "num")),
    "abs": ("abs", ("var", "x", "num"), ("var", "x", "num")),
    "quote": ("quote", ("var", "x", "bool")),
    "eq": ("comb", ("comb", ("const", "=", ("fun", "num", NB)), ("var", "x", "num")), ("var", "y", "num")),
    "quoted_name": ("var", 'a"b', "bool"),
}

if __name__ == "__main__":
    for name, t in CASES.items():
        print(name + ": " + E(t))

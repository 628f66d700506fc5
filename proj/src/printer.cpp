#include "cqe/error.hpp"
#include "cqe/frontend.hpp"

namespace cqe {

namespace {

// Precedence levels, loosest first.
enum Prec { kBinder = 0, kImp = 1, kOr = 2, kAnd = 3, kNot = 4, kRel = 5, kAdd = 6, kMul = 7, kApp = 8, kAtom = 9 };

struct InfixInfo {
  const char* op;
  int prec;
  char assoc;  // 'r', 'l', or 'n'
};

const InfixInfo kInfix[] = {{"==>", kImp, 'r'}, {"\\/", kOr, 'r'}, {"/\\", kAnd, 'r'},
                            {"=", kRel, 'n'},   {"<=", kRel, 'n'}, {"+", kAdd, 'l'},
                            {"*", kMul, 'l'}};

const InfixInfo* infix_info(const std::string& name) {
  for (const auto& i : kInfix)
    if (name == i.op) return &i;
  return nullptr;
}

bool is_symbolic(const std::string& name) {
  return infix_info(name) || name == "~" || name == "!" || name == "?";
}

class Printer {
 public:
  Printer(const Signature* sig, bool annotate) : sig_(sig), annotate_(annotate) {}

  std::string print(const Term& t, int need) {
    std::string s;
    int p = emit(t, s);
    return p < need ? "(" + s + ")" : s;
  }

 private:
  bool polymorphic(const std::string& name) const {
    if (!sig_) return false;
    auto g = sig_->constant_type(name);
    return g && type_has_vars(*g);
  }

  std::string var(const Term& v) const {
    return annotate_ ? "(" + v.name() + ":" + to_string(v.type()) + ")" : v.name();
  }

  std::string constant(const Term& c) const {
    if (is_string_literal(c)) return c.name();
    bool sym = is_symbolic(c.name());
    if (annotate_ && polymorphic(c.name()))
      return "(" + c.name() + ":" + to_string(c.type()) + ")";
    return sym ? "(" + c.name() + ")" : c.name();
  }

  int emit(const Term& t, std::string& s) {
    switch (t.kind()) {
      case Term::Kind::Var: s += var(t); return kAtom;
      case Term::Kind::Const: s += constant(t); return kAtom;
      case Term::Kind::Abs:
        s += "\\" + binder(t.binder()) + ". " + print(t.body(), kBinder);
        return kBinder;
      case Term::Kind::Quote: s += "Q_ " + print(t.body(), kBinder) + " _Q"; return kAtom;
      case Term::Kind::Hole:
        s += "(H_ " + print(t.content(), kBinder) + " _H";
        if (annotate_) s += ":" + to_string(t.annotation());
        s += ")";
        return kAtom;
      case Term::Kind::Eval:
        s += "(eval " + print(t.content(), kBinder) + " to " + to_string(t.annotation()) + ")";
        return kAtom;
      case Term::Kind::Comb: break;
    }
    const Term& f = t.op();
    const Term& x = t.arg();
    if (f.is_const()) {
      if ((f.name() == "!" || f.name() == "?") && x.is_abs()) {
        s += f.name() + binder(x.binder()) + ". " + print(x.body(), kBinder);
        return kBinder;
      }
      if (f.name() == "~" && f.type() == fun_ty(bool_ty(), bool_ty())) {
        s += "~" + print(x, kNot);
        return kNot;
      }
    }
    if (f.is_comb() && f.op().is_const()) {
      if (const InfixInfo* i = infix_info(f.op().name())) {
        int lp = i->assoc == 'l' ? i->prec : i->prec + 1;
        int rp = i->assoc == 'r' ? i->prec : i->prec + 1;
        s += print(f.arg(), lp) + " " + i->op + " " + print(x, rp);
        return i->prec;
      }
    }
    s += print(f, kApp) + " " + print(x, kAtom);
    return kApp;
  }

  std::string binder(const Term& v) const {
    return annotate_ ? v.name() + ":" + to_string(v.type()) : v.name();
  }

  const Signature* sig_;
  bool annotate_;
};

}  // namespace

std::string print_type(const Type& ty) { return to_string(ty); }

std::string print_term(const Term& t, const Signature& sig) {
  return Printer(&sig, true).print(t, 0);
}

std::string show_term(const Term& t) { return Printer(nullptr, false).print(t, 0); }

}  // namespace cqe

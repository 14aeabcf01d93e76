#include "mltt/frontend/printer.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "mltt/frontend/surface.hpp"

namespace mltt::frontend {

namespace {

// Precedence levels: `->` and `\` extend as far right as possible, `**` binds
// tighter than `->`, an application or prefix form needs parentheses in
// argument position.
enum Prec { kTerm = 0, kProd = 1, kApp = 2, kAtom = 3 };

class Printer {
 public:
  explicit Printer(std::vector<std::string> names) : names_(std::move(names)) {
    sanitize();
    used_.insert(names_.begin(), names_.end());
  }

  std::string run(const Term& t) {
    print(t, kTerm);
    return std::move(out_);
  }

 private:
  bool taken(const std::string& n) const { return used_.count(n) > 0 || is_keyword(n); }

  std::string fresh(std::string_view base) {
    std::string n(base);
    for (int k = 1; taken(n); ++k) n = std::string(base) + std::to_string(k);
    return n;
  }

  // Give every entry a distinct, referable name so that each index prints
  // as a name that resolves back to it.
  void sanitize() {
    std::set<std::string> seen;
    for (std::size_t k = names_.size(); k-- > 0;) {
      std::string& n = names_[k];
      if (n.empty() || n == "_" || is_keyword(n) || seen.count(n)) {
        std::string base = n.empty() || n == "_" || is_keyword(n) ? "v" : n;
        std::string cand = base + "'";
        for (int i = 1; seen.count(cand) || std::count(names_.begin(), names_.end(), cand); ++i)
          cand = base + "'" + std::to_string(i);
        n = cand;
      }
      seen.insert(n);
    }
  }

  void push(std::string name) {
    used_.insert(name);
    names_.push_back(std::move(name));
  }
  void pop() {
    used_.erase(used_.find(names_.back()));
    names_.pop_back();
  }

  void open(bool paren) { if (paren) out_ += '('; }
  void close(bool paren) { if (paren) out_ += ')'; }

  // Print `body` under one new binder named `x`.
  void under(const std::string& x, const Term& body, int prec) {
    push(x);
    print(body, prec);
    pop();
  }

  void binder_form(const Term& t, std::string_view base, std::string_view op, int prec) {
    const bool sigma = t.is(Tag::Sigma);
    const bool paren = prec > (sigma ? kProd : kTerm);
    const int cod_prec = sigma ? kProd : kTerm;
    open(paren);
    if ((t.is(Tag::Pi) || sigma) && !occurs(t.cod(), 0)) {
      print(t.dom(), sigma ? kApp : kProd);
      out_ += ' ';
      out_ += op;
      out_ += ' ';
      under("_", t.cod(), cod_prec);
    } else {
      const std::string x = fresh(base);
      if (t.is(Tag::Lam)) out_ += '\\';
      out_ += "(" + x + " : ";
      print(t.dom(), kTerm);
      out_ += ") ";
      out_ += op;
      out_ += ' ';
      under(x, t.child(1), cod_prec);
    }
    close(paren);
  }

  void prefix(std::string_view kw, const Term& t, int prec) {
    const bool paren = prec > kApp;
    open(paren);
    out_ += kw;
    for (const Term& c : t.children()) {
      out_ += ' ';
      print(c, kAtom);
    }
    close(paren);
  }

  void print(const Term& t, int prec) {
    switch (t.tag()) {
      case Tag::Var: {
        const std::uint32_t i = t.index();
        if (i < names_.size()) out_ += names_[names_.size() - 1 - i];
        else out_ += "#" + std::to_string(i);  // not well-scoped in names
        return;
      }
      case Tag::Univ: out_ += "Type"; return;
      case Tag::Nat: out_ += "Nat"; return;
      case Tag::Empty: out_ += "Empty"; return;
      case Tag::Zero: out_ += "zero"; return;
      case Tag::Pi: binder_form(t, "x", "->", prec); return;
      case Tag::Sigma: binder_form(t, "x", "**", prec); return;
      case Tag::Lam: binder_form(t, "x", "=>", prec); return;
      case Tag::App: {
        const bool paren = prec > kApp;
        open(paren);
        print(t.fn(), kApp);
        out_ += ' ';
        print(t.arg(), kAtom);
        close(paren);
        return;
      }
      case Tag::Succ: prefix("succ", t, prec); return;
      case Tag::Fst: prefix("fst", t, prec); return;
      case Tag::Snd: prefix("snd", t, prec); return;
      case Tag::Id: prefix("Id", t, prec); return;
      case Tag::Refl: prefix("refl", t, prec); return;
      case Tag::Pair: {
        const std::string x = fresh("x");
        out_ += "pair(";
        print(t.child(0), kTerm);
        out_ += ", " + x + ". ";
        under(x, t.child(1), kTerm);
        out_ += ", ";
        print(t.child(2), kTerm);
        out_ += ", ";
        print(t.child(3), kTerm);
        out_ += ')';
        return;
      }
      case Tag::NatElim: {
        const std::string x = fresh("n");
        out_ += "natrec(" + x + ". ";
        under(x, t.child(0), kTerm);
        for (std::size_t k = 1; k < 4; ++k) {
          out_ += ", ";
          print(t.child(k), kTerm);
        }
        out_ += ')';
        return;
      }
      case Tag::IdElim: {
        out_ += "idrec(";
        print(t.child(0), kTerm);
        out_ += ", ";
        print(t.child(1), kTerm);
        const std::string y = fresh("y");
        push(y);
        const std::string e = fresh("e");
        push(e);
        out_ += ", " + y + " " + e + ". ";
        print(t.child(2), kTerm);
        pop();
        pop();
        for (std::size_t k = 3; k < 6; ++k) {
          out_ += ", ";
          print(t.child(k), kTerm);
        }
        out_ += ')';
        return;
      }
      case Tag::EmptyElim: {
        const std::string x = fresh("z");
        out_ += "exfalso(" + x + ". ";
        under(x, t.child(0), kTerm);
        out_ += ", ";
        print(t.child(1), kTerm);
        out_ += ')';
        return;
      }
    }
  }

  std::vector<std::string> names_;
  std::multiset<std::string> used_;
  std::string out_;
};

}  // namespace

std::string print(const Term& t, const std::vector<std::string>& names) {
  return Printer(names).run(t);
}

}  // namespace mltt::frontend

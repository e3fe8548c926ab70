#include "nsym/serialize.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "json.hpp"

namespace nsym {

namespace {

std::string_view text_label(Basis b) { return b == Basis::h_sym ? "h" : basis_label(b); }

std::string_view latex_label(Basis b) {
  switch (b) {
    case Basis::H: return "H";
    case Basis::R: return "R";
    case Basis::M: return "M";
    case Basis::dI: return "\\mathfrak{S}^{*}";
    case Basis::h_sym: return "h";
  }
  return "?";
}

template <typename Token>
std::string signed_sum(const BasisExpr& e, Token token) {
  if (e.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [index, coeff] : e.terms()) {
    const bool negative = coeff < 0;
    // |INT64_MIN| is not representable; print it through unsigned.
    const std::uint64_t mag = negative ? 0 - static_cast<std::uint64_t>(coeff) : static_cast<std::uint64_t>(coeff);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    out += token(index, mag);
  }
  return out;
}

class TextParser {
 public:
  TextParser(std::string_view s, Basis fallback) : s_(s), fallback_(fallback) {}

  BasisExpr run() {
    skip();
    if (at_end()) error("empty expression");
    if (s_[pos_] == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip();
      if (at_end()) return BasisExpr(fallback_);
      pos_ = save;
    }
    std::optional<Basis> basis;
    std::vector<std::pair<Composition, Coeff>> terms;
    bool first = true;
    while (true) {
      skip();
      if (at_end()) break;
      Coeff sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        error("expected '+' or '-'");
      }
      first = false;
      Coeff coeff = 1;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        coeff = read_int<Coeff>();
        skip();
        expect('*');
        skip();
      }
      Basis b = read_label();
      if (basis && *basis != b) error("mixed bases in one expression");
      basis = b;
      skip();
      expect('(');
      std::vector<int> parts;
      skip();
      if (!at_end() && s_[pos_] != ')') {
        while (true) {
          skip();
          parts.push_back(read_int<int>());
          skip();
          if (!at_end() && s_[pos_] == ',') {
            ++pos_;
            continue;
          }
          break;
        }
      }
      expect(')');
      for (int p : parts) {
        if (p <= 0) error("index parts must be positive");
      }
      terms.emplace_back(Composition(std::move(parts)), checked_mul(sign, coeff));
    }
    BasisExpr out(*basis);
    for (const auto& [index, coeff] : terms) out.add_term(index, coeff);
    return out;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::kParse, "expression parse error at offset " + std::to_string(pos_) + ": " + msg);
  }
  void expect(char c) {
    if (at_end() || s_[pos_] != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }
  template <typename T>
  T read_int() {
    T value{};
    std::size_t start = pos_;
    if (!at_end() && s_[pos_] == '-') ++pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, value);
    if (ec != std::errc() || ptr != s_.data() + pos_) {
      pos_ = start;
      error("expected an integer");
    }
    return value;
  }
  Basis read_label() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) error("expected a basis label");
    return basis_from_label(s_.substr(start, pos_ - start));
  }

  std::string_view s_;
  Basis fallback_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_text(const BasisExpr& e) {
  const std::string label(text_label(e.basis()));
  return signed_sum(e, [&](const Composition& index, std::uint64_t mag) {
    std::string t = mag == 1 ? "" : std::to_string(mag) + "*";
    return t + label + to_string(index);
  });
}

std::string to_latex(const BasisExpr& e) {
  const std::string label(latex_label(e.basis()));
  return signed_sum(e, [&](const Composition& index, std::uint64_t mag) {
    std::string t = mag == 1 ? "" : std::to_string(mag) + " ";
    return t + label + "_{" + to_string(index) + "}";
  });
}

std::string to_json(const BasisExpr& e) {
  nlohmann::ordered_json j;
  j["basis"] = std::string(basis_label(e.basis()));
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [index, coeff] : e.terms()) {
    j["terms"].push_back({{"coeff", coeff}, {"index", index.parts()}});
  }
  return j.dump();
}

BasisExpr parse_text(std::string_view text, Basis fallback) { return TextParser(text, fallback).run(); }

BasisExpr parse_json(std::string_view text) {
  try {
    auto j = nlohmann::json::parse(text);
    BasisExpr out(basis_from_label(j.at("basis").get<std::string>()));
    for (const auto& t : j.at("terms")) {
      out.add_term(Composition(t.at("index").get<std::vector<int>>()), t.at("coeff").get<Coeff>());
    }
    return out;
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorCode::kParse, std::string("invalid expression JSON: ") + ex.what());
  } catch (const Error& ex) {
    if (ex.code() == ErrorCode::kInvalidArgument) fail(ErrorCode::kParse, ex.what());
    throw;
  }
}

}  // namespace nsym

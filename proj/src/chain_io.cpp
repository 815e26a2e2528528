#include "belyi/chain_io.hpp"

#include <cctype>

namespace belyi {

using nlohmann::json;

json chain_to_json(const MapChain& chain, const std::string& provenance) {
    json steps = json::array();
    for (const auto& s : chain.steps()) {
        json step;
        if (s.is_poly()) {
            step["kind"] = "poly";
            json coeffs = json::array();
            for (const auto& c : s.poly().coeffs()) coeffs.push_back(rational_to_string(c));
            step["coeffs"] = std::move(coeffs);
        } else {
            step["kind"] = "mobius";
            const MobiusMap& m = s.mobius();
            step["matrix"] = json::array(
                {json::array({rational_to_string(m.a()), rational_to_string(m.b())}),
                 json::array({rational_to_string(m.c()), rational_to_string(m.d())})});
        }
        steps.push_back(std::move(step));
    }
    json doc;
    doc["version"] = kChainDocumentVersion;
    doc["steps"] = std::move(steps);
    doc["total_degree"] = chain.total_degree().get_str();
    doc["provenance"] = provenance;
    return doc;
}

MapChain chain_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("chain document: not a JSON object");
    if (doc.value("version", "") != kChainDocumentVersion)
        throw ParseError("chain document: missing or unsupported version");
    if (!doc.contains("steps") || !doc["steps"].is_array() || doc["steps"].empty())
        throw ParseError("chain document: missing non-empty steps array");
    std::vector<ChainStep> steps;
    for (size_t i = 0; i < doc["steps"].size(); ++i) {
        const json& step = doc["steps"][i];
        const std::string at = "chain document, step " + std::to_string(i) + ": ";
        try {
            std::string kind = step.value("kind", "");
            if (kind == "poly") {
                std::vector<Rational> coeffs;
                for (const auto& c : step.at("coeffs"))
                    coeffs.push_back(parse_rational(c.get<std::string>()));
                steps.emplace_back(RatPoly(std::move(coeffs)));
            } else if (kind == "mobius") {
                const json& m = step.at("matrix");
                steps.emplace_back(MobiusMap(parse_rational(m.at(0).at(0).get<std::string>()),
                                             parse_rational(m.at(0).at(1).get<std::string>()),
                                             parse_rational(m.at(1).at(0).get<std::string>()),
                                             parse_rational(m.at(1).at(1).get<std::string>())));
            } else {
                throw ParseError(at + "unknown step kind '" + kind + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(at + e.what());
        }
    }
    MapChain chain{std::move(steps)};
    if (doc.contains("total_degree") &&
        chain.total_degree().get_str() != doc["total_degree"].get<std::string>())
        throw ParseError("chain document: total_degree does not match the steps");
    return chain;
}

namespace {

class PolyParser {
  public:
    explicit PolyParser(const std::string& text) : text_(text) {}

    RatPoly parse() {
        RatPoly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("polynomial parse error at position " + std::to_string(pos_) + ": " +
                         msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    RatPoly expr() {
        RatPoly acc = term();
        for (;;) {
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else return acc;
        }
    }

    RatPoly term() {
        RatPoly acc = unary();
        for (;;) {
            if (eat('*')) {
                acc = acc * unary();
            } else {
                char c = peek();
                if (c == 'z' || c == '(') acc = acc * unary();  // juxtaposition
                else return acc;
            }
        }
    }

    RatPoly unary() {
        bool neg = false;
        for (;;) {
            if (eat('-')) neg = !neg;
            else if (eat('+')) continue;
            else break;
        }
        RatPoly p = power();
        return neg ? -p : p;
    }

    RatPoly power() {
        RatPoly base = primary();
        while (eat('^')) {
            skip_ws();
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == start) fail("expected a nonnegative integer exponent");
            unsigned long e = std::stoul(text_.substr(start, pos_ - start));
            if (e > 64) fail("exponent too large");
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    RatPoly primary() {
        char c = peek();
        if (c == 'z') {
            ++pos_;
            return RatPoly::identity();
        }
        if (c == '(') {
            ++pos_;
            RatPoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return RatPoly::constant(number());
        }
        fail("expected a coefficient, 'z', or '('");
    }

    Rational number() {
        auto digits = [&]() -> Integer {
            skip_ws();
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == start) fail("expected digits");
            return Integer(text_.substr(start, pos_ - start));
        };
        Integer num = digits();
        if (eat('/')) return make_rational(num, digits());
        return Rational(num);
    }

    const std::string& text_;
    size_t pos_ = 0;
};

}  // namespace

RatPoly parse_poly(const std::string& text) { return PolyParser(text).parse(); }

std::vector<ExtPoint> parse_points(const std::string& text) {
    std::vector<ExtPoint> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos)
            throw ParseError("point list: empty entry at offset " + std::to_string(pos));
        auto last = item.find_last_not_of(" \t");
        item = item.substr(first, last - first + 1);
        if (item == "oo" || item == "inf") {
            out.push_back(ExtPoint::infinity());
        } else {
            try {
                out.push_back(ExtPoint::finite(parse_rational(item)));
            } catch (const std::exception&) {
                throw ParseError("point list: bad point '" + item + "' at offset " +
                                 std::to_string(pos));
            }
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace belyi

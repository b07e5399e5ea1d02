// Copyright 2026 The hepgrover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hepgrover/qasm.hpp"

#include "hepgrover/errors.hpp"
#include "hepgrover/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace hepgrover {
namespace {

constexpr std::string_view kLabelPrefix = "// circuit: ";

std::string qref(Qubit q) { return "q[" + std::to_string(q) + "]"; }
std::string aref(std::size_t a) { return "anc[" + std::to_string(a) + "]"; }

void emit_ccx(std::ostream &out, const std::string &c0, const std::string &c1,
              const std::string &t) {
    out << "ccx " << c0 << ',' << c1 << ',' << t << ";\n";
}

void emit_mcz(std::ostream &out, const Gate &g) {
    const auto &c = g.controls;
    const std::string t = qref(g.targets.front());
    if (c.size() == 1) {
        out << "cz " << qref(c[0]) << ',' << t << ";\n";
        return;
    }
    if (c.size() == 2) {
        out << "h " << t << ";\n";
        emit_ccx(out, qref(c[0]), qref(c[1]), t);
        out << "h " << t << ";\n";
        return;
    }
    // anc[j] = c0 & ... & c(j+1)
    const std::size_t ladder = c.size() - 2;
    auto compute = [&](std::size_t j) {
        if (j == 0) {
            emit_ccx(out, qref(c[0]), qref(c[1]), aref(0));
        } else {
            emit_ccx(out, qref(c[j + 1]), aref(j - 1), aref(j));
        }
    };
    for (std::size_t j = 0; j < ladder; ++j) {
        compute(j);
    }
    out << "h " << t << ";\n";
    emit_ccx(out, aref(ladder - 1), qref(c.back()), t);
    out << "h " << t << ";\n";
    for (std::size_t j = ladder; j-- > 0;) {
        compute(j);
    }
}

// ---------------------------------------------------------------- lexer

enum class Tok { Ident, Int, Real, String, Punct, Arrow, End };

struct Token {
    Tok kind{Tok::End};
    std::string text;
    std::size_t line{0};
    std::size_t column{0};
};

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_space_and_comments();
        Token t{Tok::End, {}, line_, col_};
        if (pos_ >= src_.size()) {
            return t;
        }
        const char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                    src_[pos_] == '_')) {
                t.text += take();
            }
            t.kind = Tok::Ident;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() &&
                   (std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
                    src_[pos_] == '.')) {
                t.text += take();
            }
            t.kind = t.text.find('.') == std::string::npos ? Tok::Int : Tok::Real;
        } else if (c == '"') {
            take();
            while (pos_ < src_.size() && src_[pos_] != '"' &&
                   src_[pos_] != '\n') {
                t.text += take();
            }
            if (pos_ >= src_.size() || src_[pos_] != '"') {
                throw ParseError("unterminated string", t.line, t.column);
            }
            take();
            t.kind = Tok::String;
        } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
            take();
            take();
            t.kind = Tok::Arrow;
            t.text = "->";
        } else if (c == '[' || c == ']' || c == ',' || c == ';') {
            t.kind = Tok::Punct;
            t.text = std::string(1, take());
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'",
                             t.line, t.column);
        }
        return t;
    }

  private:
    char take() {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                take();
            } else if (c == '/' && pos_ + 1 < src_.size() &&
                       src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    take();
                }
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_{0};
    std::size_t line_{1};
    std::size_t col_{1};
};

// ---------------------------------------------------------------- parser

struct Register {
    std::size_t offset;
    std::size_t size;
};

class Parser {
  public:
    explicit Parser(std::string_view src) : lex_(src) { advance(); }

    Circuit run(std::string label) {
        expect_ident("OPENQASM");
        if (cur_.kind != Tok::Real || cur_.text != "2.0") {
            fail("expected version 2.0");
        }
        advance();
        expect_punct(";");
        if (cur_.kind == Tok::Ident && cur_.text == "include") {
            advance();
            if (cur_.kind != Tok::String) {
                fail("expected include file name");
            }
            advance();
            expect_punct(";");
        }

        std::vector<Gate> gates;
        std::vector<std::pair<std::size_t, std::size_t>> where;
        while (cur_.kind != Tok::End) {
            if (cur_.kind != Tok::Ident) {
                fail("expected a statement");
            }
            const Token head = cur_;
            advance();
            if (head.text == "qreg" || head.text == "creg") {
                declare(head, head.text == "qreg" ? qregs_ : cregs_);
            } else if (head.text == "measure") {
                measure();
            } else if (head.text == "barrier") {
                operands();
            } else {
                gates.push_back(gate(head));
                where.emplace_back(head.line, head.column);
            }
        }

        Circuit c(qubit_count_, std::move(label));
        for (std::size_t i = 0; i < gates.size(); ++i) {
            try {
                c.add(gates[i]);
            } catch (const ValidationError &e) {
                throw ValidationError("line " + std::to_string(where[i].first) +
                                      ": " + e.what());
            }
        }
        return c;
    }

  private:
    [[noreturn]] void fail(const std::string &msg) const {
        throw ParseError(msg, cur_.line, cur_.column);
    }

    void advance() { cur_ = lex_.next(); }

    void expect_ident(std::string_view word) {
        if (cur_.kind != Tok::Ident || cur_.text != word) {
            fail("expected '" + std::string(word) + "'");
        }
        advance();
    }

    void expect_punct(std::string_view p) {
        if (cur_.kind != Tok::Punct || cur_.text != p) {
            fail("expected '" + std::string(p) + "'");
        }
        advance();
    }

    std::size_t integer() {
        if (cur_.kind != Tok::Int) {
            fail("expected an integer");
        }
        const std::size_t v = std::stoull(cur_.text);
        advance();
        return v;
    }

    std::string identifier() {
        if (cur_.kind != Tok::Ident) {
            fail("expected an identifier");
        }
        std::string name = cur_.text;
        advance();
        return name;
    }

    void declare(const Token &head, std::map<std::string, Register> &table) {
        const std::string name = identifier();
        expect_punct("[");
        const std::size_t size = integer();
        expect_punct("]");
        expect_punct(";");
        if (size == 0) {
            throw ParseError("register '" + name + "' has size 0", head.line,
                             head.column);
        }
        if (qregs_.count(name) != 0 || cregs_.count(name) != 0) {
            throw ParseError("register '" + name + "' declared twice",
                             head.line, head.column);
        }
        if (&table == &qregs_) {
            table[name] = {qubit_count_, size};
            qubit_count_ += size;
        } else {
            table[name] = {0, size};
        }
    }

    // Whole register or one element; the index is checked against the size.
    void register_ref(const std::map<std::string, Register> &table,
                      const char *what) {
        const Token at = cur_;
        const std::string name = identifier();
        const auto it = table.find(name);
        if (it == table.end()) {
            throw ValidationError("line " + std::to_string(at.line) + ": " +
                                  what + " undeclared register '" + name + "'");
        }
        if (cur_.kind == Tok::Punct && cur_.text == "[") {
            advance();
            const std::size_t index = integer();
            expect_punct("]");
            if (index >= it->second.size) {
                throw ValidationError("line " + std::to_string(at.line) +
                                      ": " + name + "[" +
                                      std::to_string(index) +
                                      "] is out of range");
            }
        }
    }

    void measure() {
        register_ref(qregs_, "measure of");
        if (cur_.kind != Tok::Arrow) {
            fail("expected '->'");
        }
        advance();
        register_ref(cregs_, "measure into");
        expect_punct(";");
    }

    std::vector<Qubit> operands() {
        std::vector<Qubit> qs;
        while (true) {
            const Token at = cur_;
            const std::string reg = identifier();
            expect_punct("[");
            const std::size_t index = integer();
            expect_punct("]");
            const auto it = qregs_.find(reg);
            if (it == qregs_.end()) {
                throw ValidationError("line " + std::to_string(at.line) +
                                      ": undeclared register '" + reg + "'");
            }
            if (index >= it->second.size) {
                throw ValidationError("line " + std::to_string(at.line) +
                                      ": " + reg + "[" + std::to_string(index) +
                                      "] is out of range");
            }
            qs.push_back(it->second.offset + index);
            if (cur_.kind == Tok::Punct && cur_.text == ",") {
                advance();
                continue;
            }
            break;
        }
        expect_punct(";");
        return qs;
    }

    Gate gate(const Token &head) {
        static const std::map<std::string, GateKind, std::less<>> kinds = {
            {"x", GateKind::X},   {"h", GateKind::H},   {"z", GateKind::Z},
            {"s", GateKind::S},   {"cx", GateKind::CX}, {"cz", GateKind::CZ},
            {"ccx", GateKind::CCX},
        };
        const auto it = kinds.find(head.text);
        if (it == kinds.end()) {
            throw ParseError("unsupported gate '" + head.text + "'", head.line,
                             head.column);
        }
        std::vector<Qubit> qs = operands();
        const std::size_t want = *fixed_control_count(it->second) + 1;
        if (qs.size() != want) {
            throw ParseError("'" + head.text + "' takes " +
                                 std::to_string(want) + " operand(s), got " +
                                 std::to_string(qs.size()),
                             head.line, head.column);
        }
        Gate g;
        g.kind = it->second;
        g.targets = {qs.back()};
        qs.pop_back();
        g.controls = std::move(qs);
        return g;
    }

    Lexer lex_;
    Token cur_;
    std::map<std::string, Register> qregs_;
    std::map<std::string, Register> cregs_;
    std::size_t qubit_count_{0};
};

std::string leading_label(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    text.remove_prefix(first);
    if (text.substr(0, kLabelPrefix.size()) != kLabelPrefix) {
        return {};
    }
    text.remove_prefix(kLabelPrefix.size());
    std::string label(text.substr(0, text.find('\n')));
    if (!label.empty() && label.back() == '\r') {
        label.pop_back();
    }
    return label;
}

} // namespace

std::size_t emitted_ancillas(const Circuit &circuit) {
    std::size_t most = 0;
    for (const Gate &g : circuit.gates()) {
        if (g.kind == GateKind::MCZ && g.controls.size() > 2) {
            most = std::max(most, g.controls.size() - 2);
        }
    }
    return most;
}

std::string emit_circuit_text(const Circuit &circuit) {
    circuit.validate();
    if (circuit.num_qubits() == 0) {
        throw ValidationError("cannot emit a circuit with no qubits");
    }
    std::ostringstream out;
    if (!circuit.label().empty()) {
        std::string label = circuit.label();
        std::replace(label.begin(), label.end(), '\n', ' ');
        out << kLabelPrefix << label << '\n';
    }
    out << "OPENQASM 2.0;\n"
        << "include \"qelib1.inc\";\n"
        << "qreg q[" << circuit.num_qubits() << "];\n";
    if (const std::size_t anc = emitted_ancillas(circuit); anc > 0) {
        out << "qreg anc[" << anc << "];\n";
    }
    for (const Gate &g : circuit.gates()) {
        if (g.kind == GateKind::MCZ) {
            emit_mcz(out, g);
            continue;
        }
        out << gate_name(g.kind) << ' ';
        const auto qs = g.qubits();
        for (std::size_t i = 0; i < qs.size(); ++i) {
            out << (i ? "," : "") << qref(qs[i]);
        }
        out << ";\n";
    }
    return out.str();
}

void write_circuit_text(const Circuit &circuit,
                        const std::filesystem::path &path) {
    write_file_atomic(path, emit_circuit_text(circuit));
}

Circuit parse_circuit_text(std::string_view text) {
    return Parser(text).run(leading_label(text));
}

Circuit load_circuit_text(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open circuit file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_circuit_text(buf.str());
}

} // namespace hepgrover

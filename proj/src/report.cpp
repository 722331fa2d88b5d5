#include "fqdigraph/report.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace fqdigraph {

namespace {

using OrderList = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

bool expand_orders(std::uint64_t count) { return count <= kOrdersExpandCap; }

nlohmann::json orders_json(const OrderList& orders, std::uint64_t count) {
    nlohmann::json out = nlohmann::json::array();
    if (expand_orders(count)) {
        for (const auto& [order, mult] : orders)
            for (std::uint64_t i = 0; i < mult; ++i) out.push_back(order);
    } else {
        for (const auto& [order, mult] : orders)
            out.push_back({order, mult});
    }
    return out;
}

std::string orders_tokens(const OrderList& orders, std::uint64_t count,
                          char sep) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [order, mult] : orders) {
        if (expand_orders(count)) {
            for (std::uint64_t i = 0; i < mult; ++i) {
                if (!first) os << sep;
                os << order;
                first = false;
            }
        } else {
            if (!first) os << sep;
            os << order << '*' << mult;
            first = false;
        }
    }
    return os.str();
}

nlohmann::json basis_json(const SubspaceFp& space) {
    nlohmann::json rows = nlohmann::json::array();
    for (const FpVec& row : space.basis()) {
        nlohmann::json r = nlohmann::json::array();
        for (coeff_t c : row) r.push_back(c);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string basis_text(const SubspaceFp& space) {
    std::ostringstream os;
    for (std::size_t i = 0; i < space.basis().size(); ++i) {
        if (i) os << ' ';
        os << '[';
        const FpVec& row = space.basis()[i];
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) os << ' ';
            os << row[j];
        }
        os << ']';
    }
    return os.str();
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

void dump_json(const nlohmann::json& j, std::ostream& sink) {
    sink << j.dump(2) << '\n';
}

std::vector<std::uint64_t> class_sizes(const Partition& part) {
    std::vector<std::uint64_t> sizes;
    sizes.reserve(part.size());
    for (const auto& cls : part) sizes.push_back(cls.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace

ReportFormat parse_format(const std::string& name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "text") return ReportFormat::Text;
    throw SchemaError("unknown report format '" + name + "'");
}

nlohmann::json report_json(const ComponentStructure& s) {
    return {{"parity", s.parity == Parity::Odd ? "odd" : "even"},
            {"d", s.d},
            {"el", s.el},
            {"f00_in_W0", s.f00_in_W0},
            {"strong", s.strong},
            {"count", s.count},
            {"orders", orders_json(s.orders, s.count)},
            {"W0_basis", basis_json(s.W0)},
            {"W_basis", basis_json(s.W)}};
}

nlohmann::json report_json(const MonomialStructure& s) {
    nlohmann::json divisors = nlohmann::json::array();
    for (const auto& [ei, qi] : s.divisors) divisors.push_back({ei, qi});
    return {{"p", s.p},
            {"e", s.e},
            {"q", s.q},
            {"m", s.m},
            {"n", s.n},
            {"d", s.d},
            {"divisors", std::move(divisors)},
            {"q_s", s.q_s},
            {"e_s", s.e_s},
            {"strong", s.strong},
            {"count", s.count},
            {"orders", orders_json(s.orders, s.count)}};
}

nlohmann::json report_json(const SubgroupReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const SubgroupCheck& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"pass", c.pass},
                          {"left_size", c.left_size},
                          {"right_size", c.right_size}});
    return {{"all_pass", r.all_pass}, {"checks", std::move(checks)}};
}

nlohmann::json report_json(const Partition& part) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& cls : part) out.push_back(cls);
    return out;
}

nlohmann::json report_json(const std::vector<VerifyCase>& cases) {
    nlohmann::json arr = nlohmann::json::array();
    bool all = true;
    for (const VerifyCase& c : cases) {
        arr.push_back({{"p", c.p},
                       {"e", c.e},
                       {"q", c.q},
                       {"l", c.l},
                       {"seed", c.seed},
                       {"random", c.random},
                       {"ok", c.ok},
                       {"components", c.components},
                       {"detail", c.detail}});
        all = all && c.ok;
    }
    return {{"ok", all}, {"cases", std::move(arr)}};
}

void emit_report(const ComponentStructure& s, ReportFormat fmt,
                 std::ostream& sink) {
    switch (fmt) {
        case ReportFormat::Json:
            dump_json(report_json(s), sink);
            return;
        case ReportFormat::Csv:
            sink << s.count << ',' << orders_tokens(s.orders, s.count, ';')
                 << '\n';
            return;
        case ReportFormat::Text:
            sink << "strong: " << yesno(s.strong) << '\n'
                 << "parity: " << (s.parity == Parity::Odd ? "odd" : "even")
                 << '\n'
                 << "d: " << s.d << '\n'
                 << "el: " << s.el << '\n'
                 << "f00_in_W0: " << yesno(s.f00_in_W0) << '\n'
                 << "count: " << s.count << '\n'
                 << "orders: " << orders_tokens(s.orders, s.count, ' ') << '\n'
                 << "W0_basis: " << basis_text(s.W0) << '\n'
                 << "W_basis: " << basis_text(s.W) << '\n';
            return;
    }
}

void emit_report(const MonomialStructure& s, ReportFormat fmt,
                 std::ostream& sink) {
    switch (fmt) {
        case ReportFormat::Json:
            dump_json(report_json(s), sink);
            return;
        case ReportFormat::Csv:
            sink << s.count << ',' << orders_tokens(s.orders, s.count, ';')
                 << '\n';
            return;
        case ReportFormat::Text: {
            sink << "strong: " << yesno(s.strong) << '\n'
                 << "q: " << s.q << " (p=" << s.p << ", e=" << s.e << ")\n"
                 << "m: " << s.m << '\n'
                 << "n: " << s.n << '\n'
                 << "d: " << s.d << '\n'
                 << "divisors:";
            for (const auto& [ei, qi] : s.divisors)
                sink << " (" << ei << ',' << qi << ')';
            sink << '\n'
                 << "q_s: " << s.q_s << '\n'
                 << "e_s: " << s.e_s << '\n'
                 << "count: " << s.count << '\n'
                 << "orders: " << orders_tokens(s.orders, s.count, ' ') << '\n';
            return;
        }
    }
}

void emit_report(const SubgroupReport& r, ReportFormat fmt,
                 std::ostream& sink) {
    switch (fmt) {
        case ReportFormat::Json:
            dump_json(report_json(r), sink);
            return;
        case ReportFormat::Csv:
            for (const SubgroupCheck& c : r.checks)
                sink << c.name << ',' << (c.pass ? 1 : 0) << ',' << c.left_size
                     << ',' << c.right_size << '\n';
            return;
        case ReportFormat::Text:
            for (const SubgroupCheck& c : r.checks)
                sink << c.name << ": " << (c.pass ? "pass" : "FAIL")
                     << " (left " << c.left_size << ", right " << c.right_size
                     << ")\n";
            sink << "all_pass: " << yesno(r.all_pass) << '\n';
            return;
    }
}

void emit_report(const Partition& part, ReportFormat fmt, std::ostream& sink) {
    switch (fmt) {
        case ReportFormat::Json:
            dump_json(report_json(part), sink);
            return;
        case ReportFormat::Csv: {
            sink << part.size() << ',';
            std::vector<std::uint64_t> sizes = class_sizes(part);
            for (std::size_t i = 0; i < sizes.size(); ++i)
                sink << (i ? ";" : "") << sizes[i];
            sink << '\n';
            return;
        }
        case ReportFormat::Text:
            sink << "components: " << part.size() << '\n';
            for (const auto& cls : part) {
                for (std::size_t i = 0; i < cls.size(); ++i)
                    sink << (i ? " " : "") << cls[i];
                sink << '\n';
            }
            return;
    }
}

void emit_report(const std::vector<VerifyCase>& cases, ReportFormat fmt,
                 std::ostream& sink) {
    switch (fmt) {
        case ReportFormat::Json:
            dump_json(report_json(cases), sink);
            return;
        case ReportFormat::Csv:
            for (const VerifyCase& c : cases)
                sink << c.q << ',' << c.l << ',' << c.seed << ','
                     << c.components << ',' << (c.ok ? 1 : 0) << '\n';
            return;
        case ReportFormat::Text: {
            if (cases.size() == 1 && !cases.front().random) {
                const VerifyCase& c = cases.front();
                if (c.ok)
                    sink << "partitions agree, " << c.components
                         << " components\n";
                else
                    sink << "partitions disagree: " << c.detail << '\n';
                return;
            }
            std::uint64_t good = 0;
            for (const VerifyCase& c : cases) {
                sink << "q=" << c.q << " l=" << c.l << " seed=" << c.seed
                     << " components=" << c.components;
                if (c.ok) {
                    sink << " ok\n";
                    ++good;
                } else {
                    sink << " MISMATCH: " << c.detail << '\n';
                }
            }
            sink << good << '/' << cases.size() << " cases agree\n";
            return;
        }
    }
}

void emit_diameter_report(std::uint64_t diameter, ReportFormat fmt,
                          std::ostream& sink) {
    switch (fmt) {
        case ReportFormat::Json:
            dump_json(nlohmann::json{{"diameter", diameter}}, sink);
            return;
        case ReportFormat::Csv:
            sink << diameter << '\n';
            return;
        case ReportFormat::Text:
            sink << "diameter: " << diameter << '\n';
            return;
    }
}

}  // namespace fqdigraph

#include "lebesgue/render.hpp"

#include <algorithm>
#include <sstream>

namespace lebesgue {

namespace {

std::string cells(int n) {
    return std::string(static_cast<std::size_t>(std::max(n, 0)), '#');
}

std::string triple_text(const BijectionTriple& t) {
    return display(t.alpha) + " " + display(t.beta) + " " + display(t.gamma);
}

std::string step_text(std::size_t index, const StepTrace& s) {
    std::ostringstream os;
    os << "step " << index << " [" << to_string(s.case_taken()) << "]: " << triple_text(s.before()) << " -> "
       << triple_text(s.after()) << "  weight=" << s.conserved_weight() << " stat=" << s.conserved_stat() << '\n';
    return os.str();
}

}  // namespace

std::string render_triple_ascii(const BijectionTriple& t) {
    const Partition beta_conj = conjugate(t.beta);
    const Partition gamma_conj = conjugate(t.gamma);
    const int left = std::max(t.alpha.largest(), 1);
    const int right = std::max({beta_conj.largest(), gamma_conj.largest(), 1});

    std::ostringstream os;
    for (int i = gamma_conj.length() - 1; i >= 0; --i) {
        os << std::string(static_cast<std::size_t>(left), ' ') << " | " << cells(gamma_conj.part(i)) << '\n';
    }
    os << std::string(static_cast<std::size_t>(left) + 1, '-') << "+" << std::string(static_cast<std::size_t>(right) + 1, '-')
       << '\n';
    const int rows = std::max(t.alpha.length(), beta_conj.length());
    for (int i = 0; i < rows; ++i) {
        const std::string row = cells(t.alpha.part(i));
        os << std::string(static_cast<std::size_t>(left) - row.size(), ' ') << row << " | " << cells(beta_conj.part(i))
           << '\n';
    }
    return os.str();
}

std::string render_forward_text(const ForwardTrace& t) {
    std::ostringstream os;
    os << "input: alpha=" << display(t.input.alpha) << " beta=" << display(t.input.beta) << '\n';
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        os << step_text(i + 1, t.steps[i]);
    }
    os << "steps: " << t.steps.size() << '\n';
    os << "output: mu=" << to_string(t.output.mu) << " nu=" << to_string(t.output.nu) << '\n';
    return os.str();
}

std::string render_forward_ascii(const ForwardTrace& t) {
    std::ostringstream os;
    BijectionTriple start{t.input.alpha, t.input.beta, {}};
    os << "start " << triple_text(start) << '\n' << render_triple_ascii(start);
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        os << '\n' << step_text(i + 1, t.steps[i]) << render_triple_ascii(t.steps[i].after());
    }
    os << "\noutput: mu=" << to_string(t.output.mu) << " nu=" << to_string(t.output.nu) << '\n';
    return os.str();
}

std::string render_inverse_text(const InverseTrace& t) {
    std::ostringstream os;
    os << "input: mu=" << display(t.input.mu) << " nu=" << display(t.input.nu) << '\n';
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        os << "undo " << step_text(i + 1, t.steps[i]);
    }
    os << "steps: " << t.steps.size() << '\n';
    os << "output: alpha=" << to_string(t.output.alpha) << " beta=" << to_string(t.output.beta) << '\n';
    return os.str();
}

std::string render_inverse_ascii(const InverseTrace& t) {
    std::ostringstream os;
    BijectionTriple start{t.input.mu, {}, t.input.nu};
    os << "start " << triple_text(start) << '\n' << render_triple_ascii(start);
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        os << "\nundo " << step_text(i + 1, t.steps[i]) << render_triple_ascii(t.steps[i].before());
    }
    os << "\noutput: alpha=" << to_string(t.output.alpha) << " beta=" << to_string(t.output.beta) << '\n';
    return os.str();
}

}  // namespace lebesgue

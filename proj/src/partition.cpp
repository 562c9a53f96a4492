#include "lebesgue/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

namespace lebesgue {

Partition::Partition(std::initializer_list<int> parts) {
    *this = make_partition(std::span<const int>(parts.begin(), parts.size()));
}

Partition make_partition(std::span<const std::int64_t> raw) {
    Partition out;
    std::int64_t total = 0;
    for (std::int64_t v : raw) {
        if (v < 0) {
            throw InvalidInput("partition entries must be non-negative, got " + std::to_string(v));
        }
        if (v == 0) {
            continue;
        }
        if (v > kMaxWeight || total + v > kMaxWeight) {
            throw LimitExceeded("partition weight exceeds limit " + std::to_string(kMaxWeight));
        }
        total += v;
        out.parts_.push_back(static_cast<int>(v));
    }
    std::sort(out.parts_.begin(), out.parts_.end(), std::greater<>());
    out.weight_ = static_cast<int>(total);
    return out;
}

Partition make_partition(std::span<const int> raw) {
    std::vector<std::int64_t> wide(raw.begin(), raw.end());
    return make_partition(std::span<const std::int64_t>(wide));
}

Partition conjugate(const Partition& p) {
    // Column j (1-based) has as many cells as there are parts >= j.
    std::vector<std::int64_t> cols(static_cast<std::size_t>(p.largest()), 0);
    for (int part : p.parts()) {
        for (int j = 0; j < part; ++j) {
            ++cols[static_cast<std::size_t>(j)];
        }
    }
    return make_partition(std::span<const std::int64_t>(cols));
}

std::int64_t alt_sum(const Partition& p) {
    std::int64_t s = 0;
    for (int i = 0; i < p.length(); ++i) {
        s += (i % 2 == 0) ? p.part(i) : -p.part(i);
    }
    return s;
}

int num_odd_parts(const Partition& p) {
    return static_cast<int>(std::count_if(p.parts().begin(), p.parts().end(), [](int x) { return x % 2 != 0; }));
}

bool has_distinct_parts(const Partition& p) {
    return std::adjacent_find(p.parts().begin(), p.parts().end()) == p.parts().end();
}

bool all_parts_even(const Partition& p) {
    return std::all_of(p.parts().begin(), p.parts().end(), [](int x) { return x % 2 == 0; });
}

std::string to_string(const Partition& p) {
    std::string out;
    for (int i = 0; i < p.length(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(p.part(i));
    }
    return out;
}

std::string display(const Partition& p) {
    return p.empty() ? std::string("∅") : "(" + to_string(p) + ")";
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

Partition parse_partition(std::string_view text, bool require_canonical) {
    text = trim(text);
    std::vector<std::int64_t> raw;
    if (text.empty()) {
        return {};
    }
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view field = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
            throw InvalidInput("malformed partition entry '" + std::string(field) + "'");
        }
        raw.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    if (require_canonical) {
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] <= 0) {
                throw InvalidInput("partition parts must be positive");
            }
            if (i > 0 && raw[i] > raw[i - 1]) {
                throw InvalidInput("partition parts must be non-increasing");
            }
        }
    }
    return make_partition(std::span<const std::int64_t>(raw));
}

}  // namespace lebesgue

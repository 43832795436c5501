#pragma once

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gammadiff {

/// Formats a double with 17 significant digits, locale-independent, so that
/// identical runs serialize byte-identically and values round-trip exactly.
inline std::string format_number(double v, int precision = 17) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general,
                                   precision);
    if (res.ec != std::errc())
        throw std::runtime_error("format_number: conversion failed");
    return std::string(buf, res.ptr);
}

/// Minimal streaming JSON writer with explicit structure calls. Key order is
/// whatever the caller emits, numbers go through format_number, so the output
/// is reproducible byte for byte.
class JsonWriter {
public:
    JsonWriter& begin_object() {
        prefix();
        out_ += '{';
        stack_.push_back(true);
        return *this;
    }

    JsonWriter& end_object() {
        stack_.pop_back();
        out_ += '}';
        return *this;
    }

    JsonWriter& begin_array() {
        prefix();
        out_ += '[';
        stack_.push_back(true);
        return *this;
    }

    JsonWriter& end_array() {
        stack_.pop_back();
        out_ += ']';
        return *this;
    }

    JsonWriter& key(std::string_view name) {
        prefix();
        append_string(name);
        out_ += ':';
        pending_value_ = true;
        return *this;
    }

    JsonWriter& value(double v) {
        prefix();
        out_ += format_number(v);
        return *this;
    }

    JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }

    JsonWriter& value(std::int64_t v) {
        prefix();
        char buf[32];
        const auto res = std::to_chars(buf, buf + sizeof(buf), v);
        out_.append(buf, res.ptr);
        return *this;
    }

    JsonWriter& value(std::uint64_t v) {
        prefix();
        char buf[32];
        const auto res = std::to_chars(buf, buf + sizeof(buf), v);
        out_.append(buf, res.ptr);
        return *this;
    }

    JsonWriter& value(bool v) {
        prefix();
        out_ += v ? "true" : "false";
        return *this;
    }

    JsonWriter& value(std::string_view v) {
        prefix();
        append_string(v);
        return *this;
    }

    JsonWriter& value(const char* v) { return value(std::string_view(v)); }

    const std::string& str() const { return out_; }

private:
    void prefix() {
        if (pending_value_) {
            pending_value_ = false;
            return;
        }
        if (!stack_.empty()) {
            if (!stack_.back()) out_ += ',';
            stack_.back() = false;
        }
    }

    void append_string(std::string_view s) {
        out_ += '"';
        for (const char c : s) {
            switch (c) {
                case '"': out_ += "\\\""; break;
                case '\\': out_ += "\\\\"; break;
                case '\n': out_ += "\\n"; break;
                case '\r': out_ += "\\r"; break;
                case '\t': out_ += "\\t"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                        out_ += buf;
                    } else {
                        out_ += c;
                    }
            }
        }
        out_ += '"';
    }

    std::string out_;
    std::vector<bool> stack_;
    bool pending_value_ = false;
};

}  // namespace gammadiff

#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "arcstab/common.hpp"

namespace arcstab::detail {

// Streaming JSON emitter with explicit key order and %.17g number rendering,
// so reports are byte-stable and numerically diffable across languages.
class JsonWriter {
public:
    explicit JsonWriter(std::ostream& out) : out_(out) {}

    void begin_object() {
        prefix();
        out_ << '{';
        stack_.push_back(true);
    }
    void end_object() {
        stack_.pop_back();
        out_ << '}';
    }
    void begin_array() {
        prefix();
        out_ << '[';
        stack_.push_back(true);
    }
    void end_array() {
        stack_.pop_back();
        out_ << ']';
    }

    void key(const std::string& name) {
        prefix();
        write_string(name);
        out_ << ':';
        pending_key_ = true;
    }

    void value(double v) {
        if (!std::isfinite(v)) throw NumericError("report contains a non-finite value");
        prefix();
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        out_ << buf;
    }
    void value(long long v) {
        prefix();
        out_ << v;
    }
    void value(unsigned long long v) {
        prefix();
        out_ << v;
    }
    void value(int v) { value(static_cast<long long>(v)); }
    void value(std::size_t v) { value(static_cast<unsigned long long>(v)); }
    void value(bool v) {
        prefix();
        out_ << (v ? "true" : "false");
    }
    void value(const std::string& v) {
        prefix();
        write_string(v);
    }
    void value(const char* v) { value(std::string(v)); }

    // Raw newline between top-level members; used to isolate the timestamp.
    void newline() { out_ << '\n'; }

private:
    void prefix() {
        if (pending_key_) {
            pending_key_ = false;
            return;
        }
        if (!stack_.empty()) {
            if (stack_.back())
                stack_.back() = false;
            else
                out_ << ',';
        }
    }

    void write_string(const std::string& s) {
        out_ << '"';
        for (char c : s) {
            switch (c) {
                case '"': out_ << "\\\""; break;
                case '\\': out_ << "\\\\"; break;
                case '\n': out_ << "\\n"; break;
                case '\r': out_ << "\\r"; break;
                case '\t': out_ << "\\t"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                        out_ << buf;
                    } else {
                        out_ << c;
                    }
            }
        }
        out_ << '"';
    }

    std::ostream& out_;
    std::vector<bool> stack_;
    bool pending_key_ = false;
};

}  // namespace arcstab::detail

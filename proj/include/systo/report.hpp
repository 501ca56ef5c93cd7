#pragma once

#include <string>
#include <utility>

#include <json.hpp>

namespace systo {

enum class Status { passed, failed, skipped };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::passed: return "passed";
        case Status::failed: return "failed";
        case Status::skipped: return "skipped";
    }
    return "?";
}

/// Structured outcome of a single property check.  A failed report
/// always carries a re-checkable witness.
struct CheckReport {
    std::string name;
    Status status = Status::passed;
    nlohmann::json witness;  // null unless failed
    nlohmann::json stats = nlohmann::json::object();
    std::string note;

    bool ok() const { return status != Status::failed; }

    static CheckReport pass(std::string name, nlohmann::json stats = nlohmann::json::object(),
                            std::string note = {}) {
        CheckReport r;
        r.name = std::move(name);
        r.status = Status::passed;
        r.stats = std::move(stats);
        r.note = std::move(note);
        return r;
    }
    static CheckReport fail(std::string name, nlohmann::json witness,
                            nlohmann::json stats = nlohmann::json::object(),
                            std::string note = {}) {
        CheckReport r;
        r.name = std::move(name);
        r.status = Status::failed;
        r.witness = std::move(witness);
        r.stats = std::move(stats);
        r.note = std::move(note);
        return r;
    }
    static CheckReport skip(std::string name, std::string note = {}) {
        CheckReport r;
        r.name = std::move(name);
        r.status = Status::skipped;
        r.note = std::move(note);
        return r;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["name"] = name;
        j["status"] = status_name(status);
        j["witness"] = witness;
        j["stats"] = stats;
        if (!note.empty()) j["note"] = note;
        return j;
    }
};

}  // namespace systo

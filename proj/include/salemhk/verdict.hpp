#pragma once

#include <map>
#include <string>
#include <vector>

namespace salemhk {

enum class Answer { Yes, No, Unknown };

inline const char* to_string(Answer a)
{
    switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Unknown: return "unknown";
    }
    return "unknown";
}

struct Evidence {
    std::string condition;
    std::string value;
    bool pass = false;

    friend bool operator==(const Evidence&, const Evidence&) = default;
};

struct Verdict {
    Answer answer = Answer::Unknown;
    std::vector<Evidence> evidence;
    std::map<std::string, std::string> witness;
    std::string note; // reason for Unknown, or a remark on a Yes/No

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

} // namespace salemhk

#ifndef MQ_CONFIG_HPP
#define MQ_CONFIG_HPP

#include "mq/rat.hpp"
#include <map>
#include <string>

namespace mq {

// line-oriented "key = value" configuration; '#' starts a comment
class Config {
public:
    Config() = default;
    static Config from_file(const std::string& path);

    bool has(const std::string& key) const { return kv_.count(key) > 0; }
    std::string get(const std::string& key, const std::string& fallback) const;
    long get_long(const std::string& key, long fallback) const;
    Rat get_rat(const std::string& key, const Rat& fallback) const;

private:
    std::map<std::string, std::string> kv_;
};

} // namespace mq

#endif

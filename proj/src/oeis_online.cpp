#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <json.hpp>

#include "spectable/oeis.hpp"

namespace spectable {

bool online_search_available() { return true; }

long online_search_count(const std::vector<Integer>& terms) {
    std::string q;
    for (const auto& t : terms) q += (q.empty() ? "" : ",") + t.get_str();
    httplib::Client client("https://oeis.org");
    client.set_connection_timeout(10);
    client.set_read_timeout(20);
    const auto res = client.Get("/search?fmt=json&q=" + q);
    if (!res) throw OeisError("oeis.org request failed: " + httplib::to_string(res.error()));
    if (res->status != 200) throw OeisError("oeis.org returned HTTP " + std::to_string(res->status));
    try {
        const auto body = nlohmann::json::parse(res->body);
        if (body.is_null()) return 0;
        if (body.is_array()) return static_cast<long>(body.size());
        if (body.contains("count")) return body.at("count").get<long>();
    } catch (const nlohmann::json::exception& e) {
        throw OeisError(std::string("unexpected oeis.org reply: ") + e.what());
    }
    throw OeisError("unexpected oeis.org reply");
}

}  // namespace spectable

#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "json.hpp"

namespace httplib {
class Server;
}

namespace panofold::service {

// One multipart/form-data part.
struct Part {
    std::string content;
    std::string content_type;
    std::string filename;
};
using Parts = std::map<std::string, Part>;

struct Response {
    int status = 200;
    std::string content_type;
    std::string body;
};

inline constexpr std::size_t kDefaultMaxImageBytes = std::size_t{64} << 20;

struct Options {
    std::size_t max_image_bytes = kDefaultMaxImageBytes;
};

// Transport-independent request handlers. Expected parts: "image" (PNG/JPEG bytes) and
// "params" (JSON object; missing keys take defaults). Every 4xx body is JSON
// {"error": ..., "field": ...}. Handlers keep no state between calls.
class Api {
public:
    explicit Api(Options options = {}) : options_(options) {}

    [[nodiscard]] Response flat(const Parts& parts) const;     // image/svg+xml
    [[nodiscard]] Response net(const Parts& parts) const;      // image/svg+xml
    [[nodiscard]] Response preview(const Parts& parts) const;  // image/png, supersample 1, edges <= 1024
    [[nodiscard]] Response meta() const;                       // application/json

    [[nodiscard]] const Options& options() const { return options_; }

private:
    Options options_;
};

Response error_response(int status, const std::string& message, const std::string& field = {});

nlohmann::json meta_json(const Options& options);

struct ServerConfig {
    std::string cors_origin = "*";
    std::string static_dir;  // served under "/" when set
};

// Registers /api/v1 routes, CORS headers, JSON error bodies and the payload cap on `server`.
void install_routes(httplib::Server& server, const Api& api, const ServerConfig& config);

}  // namespace panofold::service

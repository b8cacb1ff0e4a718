#include "httplib.h"
#include "panofold/service.hpp"

namespace panofold::service {

namespace {

Parts collect_parts(const httplib::Request& req) {
    Parts parts;
    for (const auto& [name, file] : req.files) parts[name] = {file.content, file.content_type, file.filename};
    return parts;
}

void send(httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body, r.content_type);
}

}  // namespace

void install_routes(httplib::Server& server, const Api& api, const ServerConfig& config) {
    // room for the params part and multipart framing on top of the image cap
    server.set_payload_max_length(api.options().max_image_bytes + (std::size_t{1} << 20));
    server.set_default_headers({{"Access-Control-Allow-Origin", config.cors_origin}});

    server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
        if (!res.body.empty()) return;
        const std::string message = res.status == 413 ? "request exceeds the upload limit"
                                    : res.status == 404 ? "not found"
                                                        : httplib::status_message(res.status);
        send(res, error_response(res.status, message, res.status == 413 ? "image" : ""));
    });
    server.Options(R"(/api/v1/.*)", [](const httplib::Request&, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
        res.status = 204;
    });

    using Handler = Response (Api::*)(const Parts&) const;
    const auto multipart = [&api](Handler handler) {
        return [&api, handler](const httplib::Request& req, httplib::Response& res) {
            if (!req.is_multipart_form_data()) {
                send(res, error_response(400, "expected multipart/form-data with an 'image' part", "image"));
                return;
            }
            send(res, (api.*handler)(collect_parts(req)));
        };
    };
    server.Post("/api/v1/flat", multipart(&Api::flat));
    server.Post("/api/v1/net", multipart(&Api::net));
    server.Post("/api/v1/preview", multipart(&Api::preview));
    server.Get("/api/v1/meta", [&api](const httplib::Request&, httplib::Response& res) { send(res, api.meta()); });

    if (!config.static_dir.empty()) server.set_mount_point("/", config.static_dir);
}

}  // namespace panofold::service

#include <iostream>

#include "CLI11.hpp"
#include "httplib.h"
#include "panofold/service.hpp"

int main(int argc, char** argv) {
    CLI::App app{"HTTP service for panofold artifacts", "panofold_server"};
    std::string host = "127.0.0.1";
    int port = 8080;
    std::size_t max_upload_mib = 64;
    panofold::service::ServerConfig config;
    app.add_option("--host", host, "Bind address");
    app.add_option("--port", port, "Bind port")->check(CLI::Range(1, 65535));
    app.add_option("--cors-origin", config.cors_origin, "Value of Access-Control-Allow-Origin");
    app.add_option("--static-dir", config.static_dir, "Directory served under / (web UI build)")
        ->check(CLI::ExistingDirectory);
    app.add_option("--max-upload-mib", max_upload_mib, "Image size cap in MiB")->check(CLI::Range(1, 1024));
    CLI11_PARSE(app, argc, argv);

    const panofold::service::Api api(panofold::service::Options{max_upload_mib << 20});
    httplib::Server server;
    panofold::service::install_routes(server, api, config);
    std::cerr << "panofold_server listening on http://" << host << ":" << port << "\n";
    if (!server.listen(host, port)) {
        std::cerr << "panofold_server: cannot bind " << host << ":" << port << "\n";
        return 1;
    }
    return 0;
}

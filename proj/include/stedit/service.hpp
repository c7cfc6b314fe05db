#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <optional>
#include <thread>
#include <variant>

#include "json.hpp"

#include "stedit/commands.hpp"
#include "stedit/run_config.hpp"
#include "stedit/text_edit_model.hpp"

namespace httplib {
class Server;
}

namespace stedit::app {

inline constexpr const char* kServiceVersion = "1.0.0";

struct HttpReply {
  int status = 200;
  nlohmann::json body;
};

/// Validated /edit request body.
struct EditRequest {
  std::string image_b64;
  std::optional<data::Polygon> polygon;
  std::optional<std::string> mask_b64;
  std::string text;
  double cfg_scale = 3.0;
  int64_t steps = 20;
  uint64_t seed = 0;
};

/// Parses and validates an /edit body. On failure returns a 400 reply naming
/// the offending fields.
std::variant<EditRequest, HttpReply> parse_edit_request(const std::string& body);

/// Inference service: one model, requests serialized through a bounded queue.
class EditService {
 public:
  explicit EditService(RunConfig cfg);
  ~EditService();

  /// Loads the checkpoint synchronously. Throws CheckpointError.
  void load_model();
  /// Loads in a background thread; /health reports progress.
  void load_model_async();
  /// Use an already constructed model (tests, embedding).
  void set_model(TextEditModel model);
  bool model_loaded() const { return loaded_.load(); }

  HttpReply handle_health() const;
  HttpReply handle_config() const;
  HttpReply handle_edit(const std::string& body);

  /// Binds and serves until stop(). Returns false if binding fails.
  bool listen(const std::string& host, int port);
  /// Binds to an ephemeral port and serves in a background thread; returns the port.
  int start_background(const std::string& host = "127.0.0.1");
  void stop();

  uint64_t weights_checksum() const;
  int64_t pending() const { return pending_.load(); }

 private:
  void install_routes();

  RunConfig cfg_;
  TextEditModel model_{nullptr};
  std::atomic<bool> loaded_{false};
  std::string load_error_;
  mutable std::mutex state_mu_;
  std::timed_mutex model_mu_;
  std::atomic<int64_t> pending_{0};
  std::unique_ptr<httplib::Server> server_;
  std::thread server_thread_;
  std::thread load_thread_;
};

}  // namespace stedit::app

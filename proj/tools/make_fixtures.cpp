// Regenerates the frame JSON files under data/.
#include <filesystem>
#include <iostream>

#include "ribbon/fixtures.hpp"
#include "ribbon/io.hpp"

int main(int argc, char** argv) {
  namespace fx = ribbon::fixtures;
  const std::filesystem::path dir = argc > 1 ? argv[1] : "data";
  std::filesystem::create_directories(dir);
  auto save = [&](const std::string& name, const ribbon::RibbonFrame& f) {
    ribbon::io::write_text((dir / name).string(), ribbon::io::dump(ribbon::io::frame_json(f)));
    std::cout << (dir / name).string() << "\n";
  };
  save("fixture_trefoil.json", fx::trefoil_flip_frame());
  save("figure_eight_flip.json", fx::figure_eight_flip_frame());
  save("trefoil_base_fig8.json", fx::trefoil_base_fig8_frame());
  save("fig8_field.json", fx::fig8_field_frame());
  save("radial_circle.json", fx::radial_circle_frame());
  save("goalpost.json", fx::goalpost_frame());
  save("two_ray.json", fx::two_ray_frame());
  return 0;
}

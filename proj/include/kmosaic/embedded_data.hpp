// Data tables compiled into the library from the files under data/.
#pragma once

namespace kmosaic::data {

const char* zoom_blocks_text();
const char* move_patterns_text();

}  // namespace kmosaic::data

/* generated fixture: readToken FileReader, spans two lines
   still a comment: save_chunk FETCH_BUFFER */
#include <stdio.h>
#include "local_header.h"
#define SAVE_CHUNK 42
#ifdef HTTP_OK
#if defined(APPLY_INDEX) && VERSION_2
#endif

static int szName = 0x1Fu;
typedef unsigned long find_header;
struct HeaderEntry { int loadStream; long iEventFrame; };

int emitStream(int read_queue, char *m_hStreamBuffer) {
    for (Vec3Add = 0; Vec3Add < width; Vec3Add++) {
        printf("value of x = %d\n", read_queue);
    }
    const char *offset = "he said \"FrameToken\" // not a comment";
    char foo_Bar = '\'';
    double getHTTPResponse = 1e5f + 0xFFL + 3.14 + 10UL;  // bChunkIndex
    char *pFileNode = malloc(strlen(m_hStreamBuffer) + 1);
    FILE *find_header = fopen("/tmp/out.txt", "r");
    if (pFileNode == NULL) return SAVE_CHUNK;
    size_t build_cache = sizeof(struct HeaderEntry);
    return read_queue;
}
// café naïve sortFrame
int x86Targetµ = 1;
